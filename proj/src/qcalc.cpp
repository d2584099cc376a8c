#include "descentlab/qcalc.hpp"

#include <stdexcept>

namespace descentlab {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(const Composition& L) {
  Integer r = 1;
  long acc = 0;
  for (int p : L.parts()) {
    acc += p;
    r *= binomial(acc, p);
  }
  return r;
}

Poly q_integer(unsigned n) {
  std::vector<Poly::Term> terms;
  for (unsigned k = 0; k < n; ++k) terms.emplace_back(Monomial::of(Var::q, k), Integer(1));
  return Poly::from_terms(std::move(terms));
}

Poly q_factorial(unsigned n) {
  Poly r(1);
  for (unsigned k = 2; k <= n; ++k) r *= q_integer(k);
  return r;
}

Poly q_binomial(unsigned n, unsigned k) {
  if (k > n) return Poly();
  std::vector<Poly> row{Poly(1)};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Poly> next(m + 1);
    next[0] = Poly(1);
    next[m] = Poly(1);
    for (unsigned j = 1; j < m; ++j) next[j] = row[j - 1] + row[j].times_monomial(Monomial::of(Var::q, j));
    row = std::move(next);
  }
  return row[k];
}

Poly q_multinomial(unsigned n, const Composition& L) {
  if (L.size() != static_cast<int>(n)) throw std::invalid_argument("composition parts do not sum to n");
  Poly r(1);
  unsigned acc = 0;
  for (int p : L.parts()) {
    acc += static_cast<unsigned>(p);
    r *= q_binomial(acc, static_cast<unsigned>(p));
  }
  return r;
}

Poly cyclotomic(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  Poly r = Poly::var(Var::q, d) - Poly(1);
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    Poly quot;
    if (!r.divide_exact(cyclotomic(e), quot)) throw std::logic_error("cyclotomic division failed");
    r = std::move(quot);
  }
  return r;
}

RationalFunction inverse_q_factorial(unsigned n) {
  std::vector<RationalFunction::Factor> fs;
  for (unsigned d = 2; d <= n; ++d) fs.push_back({cyclotomic(d), n / d});
  return RationalFunction::from_factored(Poly(1), Integer(1), std::move(fs));
}

std::vector<Integer> euler_numbers(unsigned n) {
  std::vector<Integer> out{1};
  std::vector<Integer> row{1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1);
    next[0] = 0;
    for (unsigned k = 1; k <= m; ++k) next[k] = next[k - 1] + row[m - k];
    out.push_back(next[m]);
    row = std::move(next);
  }
  return out;
}

}  // namespace descentlab
