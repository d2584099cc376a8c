#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "descentlab/permutation.hpp"
#include "descentlab/poly.hpp"

namespace descentlab {

inline constexpr int kMaxEnumerateBn = 7;

class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  int size() const { return static_cast<int>(window_.size()); }
  // 1-based; pi_0 = 0.
  int operator()(int i) const { return i == 0 ? 0 : window_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& window() const { return window_; }
  Permutation absolute() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    return a.window_ <=> b.window_;
  }

  std::string to_string() const;  // comma separated
  static SignedPermutation parse(std::string_view text);

 private:
  std::vector<int> window_;
};

struct SignedStats {
  int des_b = 0;
  int fdes = 0;
  int neg = 0;
};

SignedStats signed_stats(const SignedPermutation& s);
std::vector<int> descent_set_b(const SignedPermutation& s);  // subset of {0..n-1}

// Applies signs to p: bit (n-1-i) of mask negates position i+1, so masks run
// lexicographically over sign vectors.
SignedPermutation with_signs(const Permutation& p, unsigned long mask);

// Order: |window| lexicographic, then sign mask ascending.
std::vector<SignedPermutation> enumerate_bn(int n);

Poly b_poly(int n);  // sum y^neg t^des_B
Poly f_poly(int n);  // sum y^neg t^fdes

}  // namespace descentlab
