#include "descentlab/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "descentlab/qcalc.hpp"

namespace descentlab {

TruncatedSeries::TruncatedSeries(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::zero(unsigned n) { return TruncatedSeries(std::vector<RationalFunction>(n + 1)); }

TruncatedSeries TruncatedSeries::constant(const RationalFunction& c, unsigned n) {
  auto s = zero(n);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
  auto r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  unsigned n = std::min(a.trunc_degree(), b.trunc_degree());
  std::vector<RationalFunction> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  unsigned n = std::min(a.trunc_degree(), b.trunc_degree());
  std::vector<RationalFunction> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      if (a.coeffs_[i].is_zero() || b.coeffs_[k - i].is_zero()) continue;
      c[k] += a.coeffs_[i] * b.coeffs_[k - i];
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const RationalFunction& f, const TruncatedSeries& s) {
  auto r = s;
  for (auto& c : r.coeffs_) c *= f;
  return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0].is_zero()) throw std::domain_error("non-unit series");
  unsigned n = trunc_degree();
  std::vector<RationalFunction> r(n + 1);
  RationalFunction inv0 = coeffs_[0].inverse();
  r[0] = inv0;
  for (unsigned k = 1; k <= n; ++k) {
    RationalFunction acc;
    for (unsigned i = 1; i <= k; ++i) {
      if (coeffs_[i].is_zero() || r[k - i].is_zero()) continue;
      acc += coeffs_[i] * r[k - i];
    }
    r[k] = -(acc * inv0);
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries TruncatedSeries::scale_argument(const RationalFunction& c) const {
  auto r = *this;
  RationalFunction p(1);
  for (unsigned k = 1; k <= trunc_degree(); ++k) {
    p *= c;
    r.coeffs_[k] *= p;
  }
  return r;
}

TruncatedSeries TruncatedSeries::truncate(unsigned n) const {
  if (n > trunc_degree()) throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<RationalFunction>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

std::string TruncatedSeries::to_string() const {
  std::string s;
  for (unsigned k = 0; k <= trunc_degree(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = coeffs_[k].to_string();
    if (k == 0) {
      s += c;
    } else {
      s += '[' + c + "]*x";
      if (k > 1) s += '^' + std::to_string(k);
    }
  }
  if (s.empty()) s = "0";
  return s + " + O(x^" + std::to_string(trunc_degree() + 1) + ')';
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.trunc_degree() != b.trunc_degree()) return false;
  for (unsigned k = 0; k <= a.trunc_degree(); ++k) {
    if (!(a[k] == b[k])) return false;
  }
  return true;
}

TruncatedSeries classical_exp(unsigned n) {
  std::vector<RationalFunction> c;
  for (unsigned k = 0; k <= n; ++k) c.emplace_back(Rational(1, factorial(k)));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries exp_q(unsigned n) {
  std::vector<RationalFunction> c;
  for (unsigned k = 0; k <= n; ++k) c.push_back(inverse_q_factorial(k));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries Exp_q(unsigned n) {
  std::vector<RationalFunction> c;
  for (unsigned k = 0; k <= n; ++k) {
    c.push_back(RationalFunction(Poly::var(Var::q, k * (k - 1) / 2)) * inverse_q_factorial(k));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries sec_plus_tan(unsigned n) {
  // (1 + sin x) / cos x, from the Taylor coefficients of sin and cos.
  std::vector<Rational> num(n + 1), cosc(n + 1), r(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Rational inv(1, factorial(k));
    inv.canonicalize();
    if (k % 2 == 0) {
      cosc[k] = (k % 4 == 0) ? inv : Rational(-inv);
    } else {
      num[k] = (k % 4 == 1) ? inv : Rational(-inv);
    }
  }
  num[0] += 1;
  for (unsigned k = 0; k <= n; ++k) {
    Rational acc = num[k];
    for (unsigned i = 1; i <= k; ++i) acc -= cosc[i] * r[k - i];
    r[k] = acc;  // cos has constant term 1
  }
  std::vector<RationalFunction> c;
  for (auto& v : r) {
    v.canonicalize();
    c.emplace_back(v);
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace descentlab
