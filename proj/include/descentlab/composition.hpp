#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descentlab/poly.hpp"

namespace descentlab {

class Permutation;

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }  // n
  int length() const { return static_cast<int>(parts_.size()); }  // l(L)
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  // By n, then lexicographically by parts.
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

  std::string to_string() const;
  static Composition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

Composition comp_from_set(const std::vector<int>& s, int n);
std::vector<int> set_from_comp(const Composition& L);
Composition concat(const Composition& a, const Composition& b);

// K <= L iff Des(K) is a subset of Des(L).
bool leq_refinement(const Composition& K, const Composition& L);

// All compositions of n in lexicographic order of descent-set bitmask.
std::vector<Composition> compositions_of(int n);
// All K <= L.
std::vector<Composition> coarsenings(const Composition& L);

Integer beta(const Composition& L);
Poly beta_q(const Composition& L);
Integer beta_hat(const Composition& L);

enum class DescentStat { des, pk, lpk, val, udr, br, altdes };
DescentStat descent_stat_from_name(std::string_view name);

Permutation canonical_perm(const Composition& L);
int stat_of_composition(const Composition& L, DescentStat st);

}  // namespace descentlab
