#pragma once

#include <set>
#include <vector>

#include "descentlab/permutation.hpp"
#include "descentlab/signed.hpp"

namespace descentlab {

inline constexpr int kMaxOrbitN = 10;

struct XFactorization {
  std::vector<int> w1, w2, w4, w5;
  int x = 0;
};

XFactorization x_factorize(const Permutation& p, int x);

// Plain swap w1 w4 x w2 w5, no gating.
Permutation phi_x(const Permutation& p, int x);
Permutation phi_prime(const Permutation& p, int x);
Permutation phi_prime_set(const Permutation& p, const std::vector<int>& S);

// Sorted ascending.
std::vector<Permutation> mfs_orbit(const Permutation& p);
// Partition of S_n into orbits, ordered by smallest member.
std::vector<std::vector<Permutation>> mfs_orbits(int n);
bool is_mfs_closed(const std::set<Permutation>& pi);

enum class LetterClass { peak, valley, dasc, ddes };
enum class Padding { inf_inf, zero_inf };  // infty pi infty, 0 pi infty

struct PaddedCounts {
  int pk = 0, val = 0, dasc = 0, ddes = 0;
};

std::vector<LetterClass> classify_letters(const Permutation& p, Padding pad);
PaddedCounts padded_counts(const Permutation& p, Padding pad);

// Sign choices in mask order: bit (n-1-i) negates position i+1.
std::vector<SignedPermutation> sign_orbit(const Permutation& p);
std::vector<SignedPermutation> b_of_set(const std::vector<Permutation>& pi);

// Descents of sigma (positions 0..n-1) read off from the letter classes of
// 0 pi infty, in the order they are found; duplicates mean double counting.
std::vector<int> bdes_prediction(const SignedPermutation& sigma);

}  // namespace descentlab
