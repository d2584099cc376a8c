#pragma once

#include <map>
#include <vector>

#include "descentlab/composition.hpp"
#include "descentlab/rational.hpp"
#include "descentlab/series.hpp"

namespace descentlab {

using CompositionMap = std::map<Composition, RationalFunction>;

// Element of Sym truncated above degree N, stored in the h-basis.
// graded()[d] holds the degree-d part; no zero coefficients are kept.
class NcsfElement {
 public:
  explicit NcsfElement(unsigned trunc_degree);
  static NcsfElement scalar(const RationalFunction& c, unsigned trunc_degree);

  unsigned trunc_degree() const { return static_cast<unsigned>(graded_.size() - 1); }
  const std::vector<CompositionMap>& graded() const { return graded_; }
  const CompositionMap& part(unsigned d) const { return graded_.at(d); }
  RationalFunction coefficient(const Composition& L) const;

  void add_term(const Composition& L, const RationalFunction& c);

  NcsfElement operator-() const;
  NcsfElement& operator+=(const NcsfElement& o);
  NcsfElement& operator-=(const NcsfElement& o);
  friend NcsfElement operator+(NcsfElement a, const NcsfElement& b) { return a += b; }
  friend NcsfElement operator-(NcsfElement a, const NcsfElement& b) { return a -= b; }
  friend NcsfElement operator*(const NcsfElement& a, const NcsfElement& b);
  friend NcsfElement operator*(const RationalFunction& c, const NcsfElement& a);

  // Degree-d part multiplied by c^d; x -> c x on the grading variable.
  NcsfElement scale_grading(const RationalFunction& c) const;

  friend bool operator==(const NcsfElement& a, const NcsfElement& b);

 private:
  std::vector<CompositionMap> graded_;
};

NcsfElement h_elem(const Composition& L, unsigned trunc_degree);
NcsfElement r_elem(const Composition& L, unsigned trunc_degree);
NcsfElement e_elem(unsigned n, unsigned trunc_degree);

// h(x) = sum h_n and e(x) = sum e_n, up to the truncation degree.
NcsfElement h_series(unsigned trunc_degree);
NcsfElement e_series(unsigned trunc_degree);

NcsfElement ncsf_mul(const NcsfElement& a, const NcsfElement& b);
NcsfElement ncsf_inverse_unit(const NcsfElement& a);  // throws on a zero constant term

CompositionMap to_r_basis(const NcsfElement& a);
NcsfElement from_r(const CompositionMap& coeffs, unsigned trunc_degree);

TruncatedSeries phi(const NcsfElement& a);
TruncatedSeries phi_q(const NcsfElement& a);
TruncatedSeries phi_hat(const NcsfElement& a);

// Rank of the h-expansion matrix of {e_L : L composition of n}.
int e_basis_rank(unsigned n);

}  // namespace descentlab
