#include <stdexcept>

#include "descentlab/families.hpp"
#include "registry_detail.hpp"

namespace descentlab::detail {

NRange n_range(const json& params) { return {params.at("min_n").get<int>(), params.at("max_n").get<int>()}; }

unsigned degree_of(const json& params) { return params.at("degree").get<unsigned>(); }

std::uint64_t seed_of(const json& params) { return params.at("seed").get<std::uint64_t>(); }

json at(int n) { return json{{"n", n}}; }

json at(int n, const std::string& what) { return json{{"n", n}, {"case", what}}; }

Poly eulerian(int n) { return generate_polynomial("eulerian", n); }
Poly b_full(int n) { return generate_polynomial("b_poly", n); }
Poly f_full(int n) { return generate_polynomial("f_poly", n); }

Poly at_y1(const Poly& p) { return p.substitute(Var::y, Poly(1)); }

Poly t_squared(const Poly& p) { return p.substitute(Var::t, Poly::var(Var::t, 2)); }

namespace {

unsigned nonneg(long e) {
  if (e < 0) throw std::logic_error("negative exponent while clearing denominators");
  return static_cast<unsigned>(e);
}

// Applies f(c, rest, a, b) to each term c * rest * y^a * t^b.
template <class F>
Poly map_terms(const Poly& P, F f) {
  Poly out;
  for (const auto& [m, c] : P.terms()) {
    Monomial rest = m.without(Var::y).without(Var::t);
    out += f(Poly::monomial(c, rest), static_cast<long>(m[Var::y]), static_cast<long>(m[Var::t]));
  }
  return out;
}

}  // namespace

Poly cleared_pkdes(const Poly& P, int n) {
  const Poly y = pv(Var::y), t = pv(Var::t);
  return map_terms(P, [&](const Poly& c, long a, long b) {
    if (a == 0) throw std::logic_error("pk term without the y^{pk+1} factor");
    return c * one_plus(y).pow(2 * a) * t.pow(a) * (y + t).pow(nonneg(b - a)) * one_plus(y * t).pow(nonneg(n - a - b + 1));
  });
}

Poly cleared_lpkdes(const Poly& P, int n) {
  const Poly y = pv(Var::y), t = pv(Var::t);
  return map_terms(P, [&](const Poly& c, long l, long d) {
    return c * one_plus(y).pow(2 * l) * t.pow(l) * (y + t).pow(nonneg(d - l)) * one_plus(y * t).pow(nonneg(n - l - d));
  });
}

Poly cleared_udr(const Poly& P, int n) {
  const Poly t = pv(Var::t);
  return map_terms(P, [&](const Poly& c, long, long j) {
    return c * (2 * t).pow(j) * one_plus(t * t).pow(nonneg(n - j));
  });
}

Poly cleared_pk(const Poly& P, int n) {
  const Poly t = pv(Var::t);
  return map_terms(P, [&](const Poly& c, long, long j) {
    return c * (4 * t).pow(j) * one_plus(t).pow(nonneg(n + 1 - 2 * j));
  });
}

Poly cleared_lpk(const Poly& P, int n) {
  const Poly t = pv(Var::t);
  return map_terms(P, [&](const Poly& c, long, long j) {
    return c * (4 * t).pow(j) * one_plus(t).pow(nonneg(n - 2 * j));
  });
}

std::map<Var, RationalFunction> lpkvaldes_point() {
  const Poly y = pv(Var::y), t = pv(Var::t);
  const Poly t2 = t * t;
  return {
      {Var::y, RationalFunction(t * one_plus(y) * (y + t), (y + t2) * one_plus(y * t))},
      {Var::z, RationalFunction(t * one_plus(y) * one_plus(y * t), one_plus(y * t2) * (y + t))},
      {Var::t, RationalFunction(y + t2, one_plus(y * t2))},
  };
}

std::map<Var, RationalFunction> pkdes_point() {
  const Poly y = pv(Var::y), t = pv(Var::t);
  return {
      {Var::y, RationalFunction(one_plus(y).pow(2) * t, (y + t) * one_plus(y * t))},
      {Var::t, RationalFunction(y + t, one_plus(y * t))},
  };
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % n);
  std::uint64_t r;
  do {
    r = gen_();
  } while (r >= limit);
  return r % n;
}

std::vector<Permutation> random_subset(const std::vector<Permutation>& all, Rng& rng) {
  std::vector<Permutation> out;
  for (const auto& p : all) {
    if (rng.coin()) out.push_back(p);
  }
  if (out.empty() && !all.empty()) out.push_back(all[rng.below(all.size())]);
  return out;
}

}  // namespace descentlab::detail
