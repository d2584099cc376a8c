#pragma once

#include <string>
#include <vector>

#include "descentlab/rational.hpp"

namespace descentlab {

// Power series in x truncated after x^N, with rational-function coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<RationalFunction> coeffs);
  static TruncatedSeries zero(unsigned n);
  static TruncatedSeries constant(const RationalFunction& c, unsigned n);

  unsigned trunc_degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const RationalFunction& operator[](unsigned k) const { return coeffs_.at(k); }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  void set(unsigned k, RationalFunction c) { coeffs_.at(k) = std::move(c); }

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const RationalFunction& c, const TruncatedSeries& s);

  TruncatedSeries reciprocal() const;  // throws "non-unit series"
  // Coefficient k becomes c^k * coeff_k, i.e. x -> c x.
  TruncatedSeries scale_argument(const RationalFunction& c) const;
  TruncatedSeries truncate(unsigned n) const;

  std::string to_string() const;

 private:
  std::vector<RationalFunction> coeffs_;
};

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries classical_exp(unsigned n);
TruncatedSeries exp_q(unsigned n);
TruncatedSeries Exp_q(unsigned n);
TruncatedSeries sec_plus_tan(unsigned n);

}  // namespace descentlab
