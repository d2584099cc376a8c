#pragma once

// Shared helpers for the identity registry; not installed.

#include <cstdint>
#include <random>
#include <vector>

#include "descentlab/identities.hpp"
#include "descentlab/permutation.hpp"

namespace descentlab::detail {

struct NRange {
  int lo;
  int hi;
};

NRange n_range(const json& params);
unsigned degree_of(const json& params);
std::uint64_t seed_of(const json& params);

json at(int n);
json at(int n, const std::string& what);

inline Poly pv(Var v) { return Poly::var(v); }
inline Poly one_plus(const Poly& p) { return Poly(1) + p; }
inline Poly one_minus(const Poly& p) { return Poly(1) - p; }
inline RationalFunction rf(const Poly& p) { return RationalFunction(p); }

Poly eulerian(int n);
Poly b_full(int n);  // B_n(y,t)
Poly f_full(int n);  // F_n(y,t)
Poly at_y1(const Poly& p);
Poly t_squared(const Poly& p);

// Sum over the y^a t^b terms of P, other variables carried along:
//   y^{pk+1} t^{des+1} -> (1+y)^{2pk+2} t^{pk+1} (y+t)^{des-pk} (1+yt)^{n-pk-des-1}
Poly cleared_pkdes(const Poly& P, int n);
//   y^{lpk} t^{des} -> (1+y)^{2lpk} t^{lpk} (y+t)^{des-lpk} (1+yt)^{n-lpk-des}
Poly cleared_lpkdes(const Poly& P, int n);
//   t^{j} -> (2t)^j (1+t^2)^{n-j}
Poly cleared_udr(const Poly& P, int n);
//   t^{j} -> (4t)^j (1+t)^{n+1-2j}
Poly cleared_pk(const Poly& P, int n);
//   t^{j} -> (4t)^j (1+t)^{n-2j}
Poly cleared_lpk(const Poly& P, int n);

// (Y, Z, T) of the (lpk, val, des) identities.
std::map<Var, RationalFunction> lpkvaldes_point();
// (U, V) of the (pk, des) and (lpk, des) identities.
std::map<Var, RationalFunction> pkdes_point();

// Deterministic across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 gen_;
};

std::vector<Permutation> random_subset(const std::vector<Permutation>& all, Rng& rng);

void add_polynomial_entries(std::vector<RegistryEntry>& out);
void add_series_entries(std::vector<RegistryEntry>& out);
void add_ncsf_entries(std::vector<RegistryEntry>& out);
void add_action_entries(std::vector<RegistryEntry>& out);
void add_bijection_entries(std::vector<RegistryEntry>& out);
void add_numeric_entries(std::vector<RegistryEntry>& out);

}  // namespace descentlab::detail
