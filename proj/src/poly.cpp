#include "descentlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace descentlab {

namespace {

constexpr char kNames[kNumVars] = {'q', 'y', 'z', 't', 'u', 'v', 'w', 'x'};

// Sort, merge equal monomials, drop zeros.
void canonicalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].first == terms[i].first) {
      terms[i].second += terms[j].second;
      ++j;
    }
    if (sgn(terms[i].second) != 0) {
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

char var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

Var var_from_name(char c) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kNames[i] == c) return static_cast<Var>(i);
  }
  throw std::invalid_argument(std::string("unknown variable '") + c + "'");
}

// ---- Monomial ----

Monomial Monomial::of(Var v, unsigned e) {
  Monomial m;
  m.set(v, e);
  return m;
}

void Monomial::set(Var v, unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
  exps_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    unsigned s = unsigned(exps_[i]) + o.exps_[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r = *this;
  r.exps_[static_cast<std::size_t>(v)] = 0;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += kNames[i];
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s;
}

// ---- Poly ----

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(Monomial(), Integer(c));
}

Poly::Poly(const Integer& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial(), c);
}

Poly Poly::var(Var v, unsigned e) { return monomial(Integer(1), Monomial::of(v, e)); }

Poly Poly::monomial(const Integer& c, const Monomial& m) {
  Poly p;
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Integer Poly::constant_term() const {
  if (!terms_.empty() && terms_[0].first.is_one()) return terms_[0].second;
  return 0;
}

Integer Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.back();
}

unsigned Poly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.back().first.total_degree(); }

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (!terms_.empty() && sgn(terms_.back().second) < 0) g = -g;
  return g;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      Integer s = terms_[i].second + o.terms_[j].second;
      if (sgn(s) != 0) merged.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b.scaled(a.terms_[0].second);
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a.scaled(b.terms_[0].second);
  std::map<Monomial, Integer> acc;
  Integer prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      auto [it, fresh] = acc.try_emplace(ma * mb);
      it->second += prod;
    }
  }
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) r.terms_.emplace_back(m, std::move(c));
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Integer& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r = *this;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

Poly Poly::divided_by_integer(const Integer& c) const {
  if (sgn(c) == 0) throw std::domain_error("division by zero");
  Poly r = *this;
  for (auto& [m, k] : r.terms_) {
    if (!mpz_divisible_p(k.get_mpz_t(), c.get_mpz_t())) throw std::domain_error("inexact integer division");
    mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Poly Poly::times_monomial(const Monomial& mono) const {
  Poly r = *this;
  for (auto& [m, k] : r.terms_) m = m * mono;
  return r;
}

Poly Poly::pow(long e) const {
  if (e < 0) throw std::domain_error("negative exponent on polynomial");
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Poly::divide_exact(const Poly& d, Poly& q) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) {
    q = Poly();
    return true;
  }
  const auto& [lm, lc] = d.leading_term();
  if (d.terms_.size() == 1) {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (!lm.divides(m) || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) return false;
      Integer k;
      mpz_divexact(k.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
      r.terms_.emplace_back(m.quotient(lm), std::move(k));
    }
    q = std::move(r);
    return true;
  }
  std::map<Monomial, Integer> rem;
  for (const auto& t : terms_) rem.insert(rem.end(), t);
  std::vector<Term> quot;
  Integer prod;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!lm.divides(top->first) || !mpz_divisible_p(top->second.get_mpz_t(), lc.get_mpz_t())) return false;
    Monomial qm = top->first.quotient(lm);
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lc.get_mpz_t());
    rem.erase(top);
    for (std::size_t i = 0; i + 1 < d.terms_.size(); ++i) {
      mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), d.terms_[i].second.get_mpz_t());
      auto [it, fresh] = rem.try_emplace(d.terms_[i].first * qm);
      it->second -= prod;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quot.emplace_back(qm, std::move(qc));
  }
  std::reverse(quot.begin(), quot.end());
  q.terms_ = std::move(quot);
  return true;
}

Poly Poly::substitute(Var v, const Poly& value) const {
  unsigned d = degree(v);
  std::vector<Poly> powers{Poly(1)};
  for (unsigned k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
  std::map<unsigned, std::vector<Term>> by_exp;
  for (const auto& [m, c] : terms_) by_exp[m[v]].emplace_back(m.without(v), c);
  Poly r;
  for (auto& [k, ts] : by_exp) r += from_terms(std::move(ts)) * powers[k];
  return r;
}

Poly Poly::truncate(Var v, unsigned max_deg) const {
  Poly r;
  for (const auto& t : terms_) {
    if (t.first[v] <= max_deg) r.terms_.push_back(t);
  }
  return r;
}

Poly Poly::coefficient_of(Var v, unsigned k) const {
  std::vector<Term> ts;
  for (const auto& [m, c] : terms_) {
    if (m[v] == k) ts.emplace_back(m.without(v), c);
  }
  return from_terms(std::move(ts));
}

Rational Poly::evaluate(const std::map<Var, Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = m.exponent(i);
      if (e == 0) continue;
      auto it = point.find(static_cast<Var>(i));
      if (it == point.end()) throw std::invalid_argument(std::string("no value for variable ") + kNames[i]);
      Rational p = 1;
      for (unsigned k = 0; k < e; ++k) p *= it->second;
      term *= p;
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

double Poly::evaluate(const std::map<Var, double>& point) const {
  double sum = 0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = m.exponent(i);
      if (e == 0) continue;
      auto it = point.find(static_cast<Var>(i));
      if (it == point.end()) throw std::invalid_argument(std::string("no value for variable ") + kNames[i]);
      term *= std::pow(it->second, static_cast<int>(e));
    }
    sum += term;
  }
  return sum;
}

Integer Poly::evaluate_mod(const std::array<long, kNumVars>& point, const Integer& mod) const {
  Integer sum = 0, term, pw;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = m.exponent(i);
      if (e == 0) continue;
      Integer base = point[i];
      mpz_powm_ui(pw.get_mpz_t(), base.get_mpz_t(), e, mod.get_mpz_t());
      term *= pw;
      term %= mod;
    }
    sum += term;
  }
  sum %= mod;
  if (sgn(sum) < 0) sum += mod;
  return sum;
}

Integer Poly::evaluate(const std::array<long, kNumVars>& point) const {
  Integer sum = 0, pw;
  for (const auto& [m, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = m.exponent(i);
      if (e == 0) continue;
      Integer base = point[i];
      mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), e);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer a = abs(c);
    if (first) {
      if (sgn(c) < 0) s += '-';
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + '*';
      s += m.to_string();
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    std::vector<Poly::Term> terms;
    skip();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = get() == '-';
      skip();
    }
    for (;;) {
      auto t = term();
      if (neg) t.second = -t.second;
      terms.push_back(std::move(t));
      skip();
      if (pos_ == s_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      neg = op == '-';
      skip();
    }
    return Poly::from_terms(std::move(terms));
  }

 private:
  Poly::Term term() {
    Integer coeff = 1;
    Monomial m;
    bool any = false;
    for (;;) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        Var v;
        try {
          v = var_from_name(get());
        } catch (const std::invalid_argument&) {
          fail("unknown variable");
        }
        unsigned e = 1;
        skip();
        if (peek() == '^') {
          get();
          skip();
          Integer n = number();
          if (!n.fits_uint_p()) fail("exponent too large");
          e = static_cast<unsigned>(n.get_ui());
        }
        m = m * Monomial::of(v, e);
      } else {
        fail("expected coefficient or variable");
      }
      any = true;
      skip();
      if (peek() != '*') break;
      get();
    }
    if (!any) fail("empty term");
    return {m, coeff};
  }

  Integer number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("polynomial parse error at ") + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

nlohmann::json Poly::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json exps = nlohmann::json::object();
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m.exponent(i) != 0) exps[std::string(1, kNames[i])] = m.exponent(i);
    }
    arr.push_back({{"coeff", c.get_str()}, {"exps", exps}});
  }
  return arr;
}

Poly Poly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& item : j) {
    Monomial m;
    for (const auto& [name, e] : item.at("exps").items()) {
      if (name.size() != 1) throw std::invalid_argument("unknown variable '" + name + "'");
      m.set(var_from_name(name[0]), e.get<unsigned>());
    }
    terms.emplace_back(m, Integer(item.at("coeff").get<std::string>()));
  }
  return from_terms(std::move(terms));
}

std::strong_ordering compare(const Poly& a, const Poly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (auto c = x[i].first <=> y[i].first; c != 0) return c;
    int k = cmp(x[i].second, y[i].second);
    if (k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

}  // namespace descentlab
