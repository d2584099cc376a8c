#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace descentlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Fixed variable universe, in print/order priority.
enum class Var : std::uint8_t { q = 0, y, z, t, u, v, w, x };
inline constexpr std::size_t kNumVars = 8;

char var_name(Var v);
Var var_from_name(char c);

class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, unsigned e = 1);

  unsigned operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  unsigned exponent(std::size_t i) const { return exps_[i]; }
  void set(Var v, unsigned e);
  unsigned total_degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Precondition: divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::array<std::uint16_t, kNumVars> exps_{};
};

class Poly {
 public:
  using Term = std::pair<Monomial, Integer>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static Poly var(Var v, unsigned e = 1);
  static Poly monomial(const Integer& c, const Monomial& m);
  static Poly from_terms(std::vector<Term> terms);

  // Ascending graded lex order; never contains a zero coefficient.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer constant_term() const;
  Integer coefficient(const Monomial& m) const;
  const Term& leading_term() const;
  unsigned degree(Var v) const;
  unsigned total_degree() const;
  Integer content() const;  // gcd of coefficients, sign of the leading coefficient

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Integer& c) const;
  Poly divided_by_integer(const Integer& c) const;  // exact; throws otherwise
  Poly times_monomial(const Monomial& m) const;

  Poly pow(long e) const;

  // Exact division. Returns false (and leaves q untouched) if d does not divide *this.
  bool divide_exact(const Poly& d, Poly& q) const;

  Poly substitute(Var v, const Poly& value) const;
  // Keep only terms whose v-degree is at most max_deg.
  Poly truncate(Var v, unsigned max_deg) const;
  // Coefficient of v^k, as a polynomial in the other variables.
  Poly coefficient_of(Var v, unsigned k) const;

  Rational evaluate(const std::map<Var, Rational>& point) const;
  double evaluate(const std::map<Var, double>& point) const;
  // Value mod m at the integer point; used as a cheap divisibility filter.
  Integer evaluate_mod(const std::array<long, kNumVars>& point, const Integer& m) const;
  Integer evaluate(const std::array<long, kNumVars>& point) const;

  std::string to_string() const;
  static Poly parse(std::string_view text);
  nlohmann::json to_json() const;
  static Poly from_json(const nlohmann::json& j);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Term> terms_;
};

// Total order on polynomials (by term sequence); used for canonical factor lists.
std::strong_ordering compare(const Poly& a, const Poly& b);

inline Poly operator*(long c, const Poly& p) { return p.scaled(Integer(c)); }

}  // namespace descentlab
