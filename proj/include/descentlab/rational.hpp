#pragma once

#include <map>
#include <string>
#include <vector>

#include "descentlab/poly.hpp"

namespace descentlab {

// num / (scale * prod factor_i^e_i). Factors are primitive, nonconstant, with a
// positive leading coefficient, and kept sorted. Not reduced to lowest terms:
// only known factors are cancelled, and equality is by cross-multiplication.
class RationalFunction {
 public:
  struct Factor {
    Poly poly;
    unsigned exponent;
  };

  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Integer& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, const Poly& den);

  static RationalFunction var(Var v) { return RationalFunction(Poly::var(v)); }
  static RationalFunction from_factored(Poly num, Integer scale, std::vector<Factor> factors);

  const Poly& num() const { return num_; }
  const Integer& den_scale() const { return scale_; }
  const std::vector<Factor>& den_factors() const { return factors_; }
  Poly den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return factors_.empty() && scale_ == 1; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  RationalFunction substitute(const std::map<Var, RationalFunction>& subs) const;
  Rational evaluate(const std::map<Var, Rational>& point) const;
  double evaluate(const std::map<Var, double>& point) const;

  // a.num * (b.den / g) - b.num * (a.den / g), g the shared denominator part.
  // Zero iff the two are equal.
  static Poly cross_difference(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string() const;

 private:
  void simplify();
  void add_factor(const Poly& primitive, unsigned e);

  Poly num_;
  Integer scale_ = 1;
  std::vector<Factor> factors_;
};

// Simultaneous substitution of variables by rational functions. The result's
// denominator is the product of the substituted denominators raised to the
// degree in which each variable occurs.
RationalFunction substitute(const Poly& p, const std::map<Var, RationalFunction>& subs);

}  // namespace descentlab
