#pragma once

#include <vector>

#include "descentlab/composition.hpp"
#include "descentlab/rational.hpp"

namespace descentlab {

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // zero outside 0 <= k <= n
Integer multinomial(const Composition& L);

Poly q_integer(unsigned n);            // 1 + q + ... + q^(n-1)
Poly q_factorial(unsigned n);          // expanded
Poly q_binomial(unsigned n, unsigned k);
Poly q_multinomial(unsigned n, const Composition& L);
Poly cyclotomic(unsigned d);           // Phi_d(q)

// 1/[n]_q! with the denominator split into cyclotomic factors.
RationalFunction inverse_q_factorial(unsigned n);

// E_0..E_n via the boustrophedon (Seidel) triangle.
std::vector<Integer> euler_numbers(unsigned n);

}  // namespace descentlab
