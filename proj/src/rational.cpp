#include "descentlab/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace descentlab {

namespace {

// Fixed integer point for the divisibility pre-check.
constexpr std::array<long, kNumVars> kProbe = {3, 5, 7, 11, 13, 17, 19, 23};

// p = c * prim with prim primitive and positive leading coefficient.
std::pair<Integer, Poly> split_content(const Poly& p) {
  Integer c = p.content();
  if (c == 1) return {c, p};
  return {c, p.divided_by_integer(c)};
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Poly factor_product(const std::vector<RationalFunction::Factor>& fs, const std::vector<unsigned>& exps) {
  Poly r(1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (exps[i] > 0) r *= fs[i].poly.pow(exps[i]);
  }
  return r;
}

}  // namespace

RationalFunction::RationalFunction(const Rational& c) : num_(c.get_num()), scale_(c.get_den()) {}

RationalFunction::RationalFunction(Poly num, const Poly& den) : num_(std::move(num)) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  auto [c, prim] = split_content(den);
  if (sgn(c) < 0) {
    num_ = -num_;
    c = -c;
  }
  scale_ = c;
  if (!prim.is_constant()) add_factor(prim, 1);
  simplify();
}

RationalFunction RationalFunction::from_factored(Poly num, Integer scale, std::vector<Factor> factors) {
  if (sgn(scale) == 0) throw std::domain_error("zero denominator");
  RationalFunction r;
  r.num_ = std::move(num);
  if (sgn(scale) < 0) {
    r.num_ = -r.num_;
    scale = -scale;
  }
  r.scale_ = std::move(scale);
  for (auto& f : factors) {
    if (f.exponent == 0) continue;
    if (f.poly.is_zero()) throw std::domain_error("zero denominator");
    auto [c, prim] = split_content(f.poly);
    Integer ce;
    mpz_pow_ui(ce.get_mpz_t(), c.get_mpz_t(), f.exponent);
    if (sgn(ce) < 0) {
      r.num_ = -r.num_;
      ce = -ce;
    }
    r.scale_ *= ce;
    if (!prim.is_constant()) r.add_factor(prim, f.exponent);
  }
  r.simplify();
  return r;
}

void RationalFunction::add_factor(const Poly& primitive, unsigned e) {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), primitive,
                             [](const Factor& f, const Poly& p) { return compare(f.poly, p) < 0; });
  if (it != factors_.end() && it->poly == primitive) {
    it->exponent += e;
  } else {
    factors_.insert(it, Factor{primitive, e});
  }
}

void RationalFunction::simplify() {
  if (num_.is_zero()) {
    scale_ = 1;
    factors_.clear();
    return;
  }
  for (auto& f : factors_) {
    Integer fv = abs(f.poly.evaluate(kProbe));
    while (f.exponent > 0) {
      if (fv > 1 && sgn(num_.evaluate_mod(kProbe, fv)) != 0) break;
      Poly q;
      if (!num_.divide_exact(f.poly, q)) break;
      num_ = std::move(q);
      --f.exponent;
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.exponent == 0; });
  if (scale_ != 1) {
    Integer g = gcd(num_.content(), scale_);
    if (g != 1) {
      num_ = num_.divided_by_integer(g);
      mpz_divexact(scale_.get_mpz_t(), scale_.get_mpz_t(), g.get_mpz_t());
    }
  }
}

Poly RationalFunction::den() const {
  Poly d(scale_);
  for (const auto& f : factors_) d *= f.poly.pow(f.exponent);
  return d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (scale_ == o.scale_ && factors_.size() == o.factors_.size() &&
      std::equal(factors_.begin(), factors_.end(), o.factors_.begin(), [](const Factor& a, const Factor& b) {
        return a.exponent == b.exponent && a.poly == b.poly;
      })) {
    num_ += o.num_;
    simplify();
    return *this;
  }
  // Merge factor lists into the lcm.
  std::vector<Factor> merged;
  std::vector<unsigned> ea, eb;
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() || (i < factors_.size() && compare(factors_[i].poly, o.factors_[j].poly) < 0)) {
      merged.push_back(factors_[i]);
      ea.push_back(factors_[i].exponent);
      eb.push_back(0);
      ++i;
    } else if (i == factors_.size() || compare(o.factors_[j].poly, factors_[i].poly) < 0) {
      merged.push_back(o.factors_[j]);
      ea.push_back(0);
      eb.push_back(o.factors_[j].exponent);
      ++j;
    } else {
      unsigned m = std::max(factors_[i].exponent, o.factors_[j].exponent);
      merged.push_back(Factor{factors_[i].poly, m});
      ea.push_back(factors_[i].exponent);
      eb.push_back(o.factors_[j].exponent);
      ++i;
      ++j;
    }
  }
  std::vector<unsigned> ma(merged.size()), mb(merged.size());
  for (std::size_t k = 0; k < merged.size(); ++k) {
    ma[k] = merged[k].exponent - ea[k];
    mb[k] = merged[k].exponent - eb[k];
  }
  Integer s = lcm(scale_, o.scale_);
  Integer sa = s / scale_, sb = s / o.scale_;
  Poly n = (num_ * factor_product(merged, ma)).scaled(sa) + (o.num_ * factor_product(merged, mb)).scaled(sb);
  num_ = std::move(n);
  scale_ = std::move(s);
  factors_ = std::move(merged);
  simplify();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  num_ *= o.num_;
  scale_ *= o.scale_;
  for (const auto& f : o.factors_) add_factor(f.poly, f.exponent);
  simplify();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  auto [c, prim] = split_content(num_);
  RationalFunction r;
  r.num_ = Poly(scale_);
  for (const auto& f : factors_) r.num_ *= f.poly.pow(f.exponent);
  if (sgn(c) < 0) {
    r.num_ = -r.num_;
    c = -c;
  }
  r.scale_ = c;
  if (!prim.is_constant()) r.factors_.push_back(Factor{prim, 1});
  r.simplify();
  return r;
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r;
  r.num_ = num_.pow(e);
  if (r.num_.is_zero()) return r;
  mpz_pow_ui(r.scale_.get_mpz_t(), scale_.get_mpz_t(), static_cast<unsigned long>(e));
  if (e > 0) {
    r.factors_ = factors_;
    for (auto& f : r.factors_) f.exponent *= static_cast<unsigned>(e);
  }
  return r;
}

RationalFunction RationalFunction::substitute(const std::map<Var, RationalFunction>& subs) const {
  RationalFunction r = descentlab::substitute(num_, subs);
  RationalFunction d{Poly(scale_)};
  for (const auto& f : factors_) d *= descentlab::substitute(f.poly, subs).pow(f.exponent);
  return r / d;
}

Rational RationalFunction::evaluate(const std::map<Var, Rational>& point) const {
  Rational d = scale_;
  for (const auto& f : factors_) {
    Rational fv = f.poly.evaluate(point);
    for (unsigned k = 0; k < f.exponent; ++k) d *= fv;
  }
  if (sgn(d) == 0) throw std::domain_error("zero denominator at evaluation point");
  Rational r = num_.evaluate(point) / d;
  r.canonicalize();
  return r;
}

double RationalFunction::evaluate(const std::map<Var, double>& point) const {
  double d = scale_.get_d();
  for (const auto& f : factors_) {
    double fv = f.poly.evaluate(point);
    for (unsigned k = 0; k < f.exponent; ++k) d *= fv;
  }
  if (d == 0.0) throw std::domain_error("zero denominator at evaluation point");
  return num_.evaluate(point) / d;
}

Poly RationalFunction::cross_difference(const RationalFunction& a, const RationalFunction& b) {
  Poly da(1), db(1);
  std::size_t i = 0, j = 0;
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && compare(fa[i].poly, fb[j].poly) < 0)) {
      da *= fa[i].poly.pow(fa[i].exponent);
      ++i;
    } else if (i == fa.size() || compare(fb[j].poly, fa[i].poly) < 0) {
      db *= fb[j].poly.pow(fb[j].exponent);
      ++j;
    } else {
      unsigned m = std::min(fa[i].exponent, fb[j].exponent);
      if (fa[i].exponent > m) da *= fa[i].poly.pow(fa[i].exponent - m);
      if (fb[j].exponent > m) db *= fb[j].poly.pow(fb[j].exponent - m);
      ++i;
      ++j;
    }
  }
  Integer g = gcd(a.scale_, b.scale_);
  da = da.scaled(a.scale_ / g);
  db = db.scaled(b.scale_ / g);
  return a.num_ * db - b.num_ * da;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::cross_difference(a, b).is_zero();
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string den;
  std::size_t pieces = factors_.size();
  if (scale_ != 1) {
    den = scale_.get_str();
    ++pieces;
  }
  for (const auto& f : factors_) {
    if (!den.empty()) den += '*';
    den += '(' + f.poly.to_string() + ')';
    if (f.exponent > 1) den += '^' + std::to_string(f.exponent);
  }
  if (pieces > 1 || (!factors_.empty() && factors_[0].exponent > 1)) den = '(' + den + ')';
  return '(' + num_.to_string() + ")/" + den;
}

RationalFunction substitute(const Poly& p, const std::map<Var, RationalFunction>& subs) {
  struct Sub {
    Var var;
    unsigned degree;
    std::vector<Poly> num_pow, den_pow;
  };
  std::vector<Sub> active;
  Integer scale = 1;
  std::vector<RationalFunction::Factor> factors;
  for (const auto& [v, value] : subs) {
    unsigned d = p.degree(v);
    if (d == 0) continue;
    Sub s{v, d, {Poly(1)}, {Poly(1)}};
    Poly vd = value.is_polynomial() ? Poly(1) : value.den();
    for (unsigned k = 1; k <= d; ++k) {
      s.num_pow.push_back(s.num_pow.back() * value.num());
      s.den_pow.push_back(value.is_polynomial() ? Poly(1) : s.den_pow.back() * vd);
    }
    Integer sc;
    mpz_pow_ui(sc.get_mpz_t(), value.den_scale().get_mpz_t(), d);
    scale *= sc;
    for (const auto& f : value.den_factors()) factors.push_back({f.poly, f.exponent * d});
    active.push_back(std::move(s));
  }
  if (active.empty()) return RationalFunction(p);
  std::map<std::vector<unsigned>, std::vector<Poly::Term>> groups;
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> key;
    Monomial rest = m;
    for (const auto& s : active) {
      key.push_back(m[s.var]);
      rest = rest.without(s.var);
    }
    groups[key].emplace_back(rest, c);
  }
  Poly num;
  for (auto& [key, terms] : groups) {
    Poly part = Poly::from_terms(std::move(terms));
    for (std::size_t i = 0; i < active.size(); ++i) {
      const auto& s = active[i];
      part *= s.num_pow[key[i]];
      part *= s.den_pow[s.degree - key[i]];
    }
    num += part;
  }
  return RationalFunction::from_factored(std::move(num), std::move(scale), std::move(factors));
}

}  // namespace descentlab
