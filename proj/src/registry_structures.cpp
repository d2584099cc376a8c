#include <algorithm>
#include <map>
#include <set>

#include "descentlab/actions.hpp"
#include "descentlab/composition.hpp"
#include "descentlab/families.hpp"
#include "descentlab/ncsf.hpp"
#include "descentlab/qcalc.hpp"
#include "descentlab/signed.hpp"
#include "descentlab/trees_paths.hpp"
#include "registry_detail.hpp"

namespace descentlab::detail {

namespace {

using PerN = std::function<void(Checker&, int, const json&)>;

void per_n(std::vector<RegistryEntry>& out, std::string id, std::string category, std::string statement, int lo, int hi,
           bool seeded, PerN f) {
  json defaults{{"min_n", lo}, {"max_n", hi}};
  if (seeded) defaults["seed"] = kDefaultSeed;
  out.push_back({std::move(id), std::move(category), std::move(statement), defaults, [f](Checker& c, const json& p) {
                   auto [a, b] = n_range(p);
                   for (int n = a; n <= b && c.ok(); ++n) f(c, n, p);
                 }});
}

void ncsf_entry(std::vector<RegistryEntry>& out, std::string id, std::string statement, unsigned degree,
                std::function<void(Checker&, unsigned)> f) {
  out.push_back({std::move(id), "ncsf", std::move(statement), json{{"degree", degree}},
                 [f](Checker& c, const json& p) { f(c, degree_of(p)); }});
}

json with_case(int n, const std::string& what, const std::string& key, const std::string& value) {
  json w = at(n, what);
  w[key] = value;
  return w;
}

unsigned u(int k) { return static_cast<unsigned>(k); }

// Compares every r_L coefficient of X up to degree N with expected(L).
void check_r_coefficients(Checker& c, const NcsfElement& X, unsigned N,
                          const std::function<RationalFunction(const Composition&)>& expected) {
  CompositionMap r = to_r_basis(X);
  for (unsigned n = 0; n <= N; ++n) {
    for (const auto& L : compositions_of(static_cast<int>(n))) {
      auto it = r.find(L);
      RationalFunction got = it == r.end() ? RationalFunction() : it->second;
      json where{{"degree", n}, {"L", L.to_string()}};
      if (!c.rational(got, expected(L), where)) return;
    }
  }
}

struct Stats {
  int des, pk, lpk, val, udr;
};

Stats stats_of(const Composition& L) {
  return {stat_of_composition(L, DescentStat::des), stat_of_composition(L, DescentStat::pk),
          stat_of_composition(L, DescentStat::lpk), stat_of_composition(L, DescentStat::val),
          stat_of_composition(L, DescentStat::udr)};
}

Poly padded_orbit_sum(const std::vector<Permutation>& orbit) {
  const Poly y = pv(Var::y), t = pv(Var::t);
  Poly s;
  for (const auto& p : orbit) {
    auto pc = padded_counts(p, Padding::inf_inf);
    s += one_plus(y * t).pow(pc.dasc) * (y + t).pow(pc.ddes) * t.pow(pc.pk);
  }
  return s;
}

std::vector<Permutation> union_of(const std::vector<std::vector<Permutation>>& orbits, Rng& rng) {
  std::vector<Permutation> out;
  for (const auto& o : orbits) {
    if (rng.coin()) out.insert(out.end(), o.begin(), o.end());
  }
  if (out.empty()) {
    const auto& o = orbits[rng.below(orbits.size())];
    out = o;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// sum over B(Pi) of y^neg t^desB (or t^fdes), optionally times w^st(|sigma|)
Poly signed_sum(const std::vector<Permutation>& pi, bool flag, const std::string& st = "") {
  std::map<Monomial, long> counts;
  for (const auto& p : pi) {
    Monomial wst = st.empty() ? Monomial() : Monomial::of(Var::w, u(statistic_value(p, st)));
    for (const auto& s : sign_orbit(p)) {
      auto ss = signed_stats(s);
      ++counts[Monomial::of(Var::y, u(ss.neg)) * Monomial::of(Var::t, u(flag ? ss.fdes : ss.des_b)) * wst];
    }
  }
  std::vector<Poly::Term> terms;
  for (const auto& [m, k] : counts) terms.emplace_back(m, Integer(k));
  return Poly::from_terms(std::move(terms));
}

// sum over Pi of y^lpk z^val t^des of pi^rc, times w^st(pi) when st is given
Poly lpkvaldes_of_rc(const std::vector<Permutation>& pi, const std::string& st = "") {
  std::map<Monomial, long> counts;
  for (const auto& p : pi) {
    Permutation r = reverse_complement(p);
    Monomial m = Monomial::of(Var::y, u(lpk(r))) * Monomial::of(Var::z, u(val(r))) * Monomial::of(Var::t, u(des(r)));
    if (!st.empty()) m = m * Monomial::of(Var::w, u(statistic_value(p, st)));
    ++counts[m];
  }
  std::vector<Poly::Term> terms;
  for (const auto& [m, k] : counts) terms.emplace_back(m, Integer(k));
  return Poly::from_terms(std::move(terms));
}

std::vector<Permutation> rc_of(const std::vector<Permutation>& pi) {
  std::vector<Permutation> out;
  for (const auto& p : pi) out.push_back(reverse_complement(p));
  return out;
}

// Pi = S_n, then `count` seeded random subsets when n <= random_max.
std::vector<std::pair<std::string, std::vector<Permutation>>> sign_classes(int n, const json& p, int count,
                                                                               int random_max, int all_max) {
  std::vector<std::pair<std::string, std::vector<Permutation>>> out;
  auto all = all_permutations(n);
  if (n <= all_max) out.emplace_back("S_n", all);
  if (n >= 1 && n <= random_max) {
    Rng rng(seed_of(p) + static_cast<std::uint64_t>(n));
    for (int i = 0; i < count; ++i) out.emplace_back("random " + std::to_string(i), random_subset(all, rng));
  }
  return out;
}

std::vector<Permutation> av231_bruteforce(int n) {
  std::vector<Permutation> out;
  for (const auto& p : enumerate_sn(n)) {
    if (avoids_231(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

void add_ncsf_entries(std::vector<RegistryEntry>& out) {
  const Poly y = pv(Var::y), t = pv(Var::t);
  const RationalFunction T(t);

  ncsf_entry(out, "NCSF-PKDES", "(1 - t e(yx) h(x))^-1 in the ribbon basis tracks (pk, des)", 6, [=](Checker& c, unsigned N) {
    NcsfElement X = ncsf_inverse_unit(NcsfElement::scalar(1, N) - T * (e_series(N).scale_grading(rf(y)) * h_series(N)));
    check_r_coefficients(c, X, N, [&](const Composition& L) {
      const int n = L.size();
      if (n == 0) return RationalFunction(Poly(1), one_minus(t));
      auto s = stats_of(L);
      Poly num = t.pow(s.pk + 1) * (y + t).pow(s.des - s.pk) * one_plus(y * t).pow(n - s.pk - s.des - 1) *
                 one_plus(y).pow(2 * s.pk + 1);
      return RationalFunction(num, one_minus(t).pow(n + 1));
    });
  });

  ncsf_entry(out, "NCSF-LPKDES", "h(x)(1 - t e(yx) h(x))^-1 in the ribbon basis tracks (lpk, des)", 6,
             [=](Checker& c, unsigned N) {
               NcsfElement X = h_series(N) * ncsf_inverse_unit(NcsfElement::scalar(1, N) -
                                                              T * (e_series(N).scale_grading(rf(y)) * h_series(N)));
               check_r_coefficients(c, X, N, [&](const Composition& L) {
                 const int n = L.size();
                 auto s = n == 0 ? Stats{0, 0, 0, 0, 0} : stats_of(L);
                 Poly num = t.pow(s.lpk) * (y + t).pow(s.des - s.lpk) * one_plus(y * t).pow(n - s.lpk - s.des) *
                            one_plus(y).pow(2 * s.lpk);
                 return RationalFunction(num, one_minus(t).pow(n + 1));
               });
             });

  ncsf_entry(out, "NCSF-UDRDES", "(1 - t^2 h(x) e(yx))^-1 (1 + t h(x)) in the ribbon basis tracks (udr, lpk, val, des)", 6,
             [=](Checker& c, unsigned N) {
               const Poly t2 = t * t;
               NcsfElement X = ncsf_inverse_unit(NcsfElement::scalar(1, N) -
                                                 RationalFunction(t2) * (h_series(N) * e_series(N).scale_grading(rf(y)))) *
                               (NcsfElement::scalar(1, N) + T * h_series(N));
               check_r_coefficients(c, X, N, [&](const Composition& L) {
                 const int n = L.size();
                 if (n == 0) return RationalFunction(Poly(1), one_minus(t));
                 auto s = stats_of(L);
                 Poly num = t.pow(s.udr) * one_plus(y).pow(s.udr - 1) * one_plus(y * t2).pow(n - 1 - s.des - s.val) *
                            (y + t2).pow(s.des - s.lpk) * one_plus(y * t).pow(1 - s.lpk + s.val) * (y + t).pow(s.lpk - s.val);
                 return RationalFunction(num, one_minus(t) * one_minus(t2).pow(n));
               });
             });

  ncsf_entry(out, "NCSF-UDR", "(1 - t^2 h(x) e(x))^-1 (1 + t h(x)) in the ribbon basis tracks udr", 6,
             [=](Checker& c, unsigned N) {
               const Poly t2 = t * t;
               NcsfElement X =
                   ncsf_inverse_unit(NcsfElement::scalar(1, N) - RationalFunction(t2) * (h_series(N) * e_series(N))) *
                   (NcsfElement::scalar(1, N) + T * h_series(N));
               check_r_coefficients(c, X, N, [&](const Composition& L) {
                 const int n = L.size();
                 if (n == 0) return RationalFunction(Poly(1), one_minus(t));
                 int r = stat_of_composition(L, DescentStat::udr);
                 Poly num = Poly(Integer(1) << (r - 1)) * t.pow(r) * one_plus(t2).pow(n - r);
                 return RationalFunction(num, one_minus(t).pow(2) * one_minus(t2).pow(n - 1));
               });
             });

  ncsf_entry(out, "NCSF-RBASIS", "h/r basis round trips; h_L is the sum of r_K over coarsenings K of L", 6,
             [](Checker& c, unsigned N) {
               for (unsigned n = 0; n <= N; ++n) {
                 for (const auto& L : compositions_of(static_cast<int>(n))) {
                   json where{{"degree", n}, {"L", L.to_string()}};
                   // r_L reads back as the unit vector at L
                   CompositionMap r = to_r_basis(r_elem(L, N));
                   bool unit = r.size() == 1 && r.begin()->first == L && r.begin()->second == RationalFunction(1);
                   if (!c.holds(unit, where)) return;
                   CompositionMap h = to_r_basis(h_elem(L, N));
                   std::set<Composition> expect;
                   for (const auto& K : coarsenings(L)) expect.insert(K);
                   bool match = h.size() == expect.size();
                   for (const auto& [K, v] : h) match = match && expect.count(K) && v == RationalFunction(1);
                   if (!c.holds(match, where)) return;
                   if (!c.holds(from_r(to_r_basis(h_elem(L, N)), N) == h_elem(L, N), where)) return;
                 }
               }
             });

  ncsf_entry(out, "NCSF-EH", "e(x) h(-x) = 1 and e_n is the ribbon r_(1^n)", 6, [](Checker& c, unsigned N) {
    NcsfElement prod = e_series(N) * h_series(N).scale_grading(RationalFunction(-1));
    if (!c.holds(prod == NcsfElement::scalar(1, N), json{{"degree", N}, {"case", "e(x)h(-x)"}})) return;
    for (unsigned n = 1; n <= N; ++n) {
      CompositionMap r = to_r_basis(e_elem(n, N));
      Composition ones(std::vector<int>(n, 1));
      bool ok = r.size() == 1 && r.begin()->first == ones && r.begin()->second == RationalFunction(1);
      if (!c.holds(ok, json{{"degree", n}, {"case", "e_n = r_(1^n)"}})) return;
    }
  });

  ncsf_entry(out, "NCSF-EBASIS", "the e_L of compositions of n are linearly independent", 5, [](Checker& c, unsigned N) {
    for (unsigned n = 1; n <= N; ++n) {
      if (!c.integer(Integer(e_basis_rank(n)), Integer(1) << (n - 1), json{{"degree", n}})) return;
    }
  });

  ncsf_entry(out, "PHI-R", "Phi, Phi_q and Phi-hat of r_L give brute-force descent class counts", 6,
             [](Checker& c, unsigned N) {
               for (unsigned n = 0; n <= N; ++n) {
                 std::map<Composition, Integer> count, alt;
                 std::map<Composition, Poly> qsum;
                 for (const auto& p : enumerate_sn(static_cast<int>(n))) {
                   count[comp(p)] += 1;
                   qsum[comp(p)] += Poly::var(Var::q, u(inv(p)));
                   alt[alt_comp(p)] += 1;
                 }
                 const RationalFunction nf(Rational(1, factorial(n)));
                 for (const auto& L : compositions_of(static_cast<int>(n))) {
                   NcsfElement r = r_elem(L, n);
                   json where{{"degree", n}, {"L", L.to_string()}};
                   where["map"] = "Phi";
                   if (!c.rational(phi(r)[n], RationalFunction(count[L]) * nf, where)) return;
                   where["map"] = "Phi_q";
                   if (!c.rational(phi_q(r)[n], RationalFunction(qsum[L]) * inverse_q_factorial(n), where)) return;
                   where["map"] = "Phi_hat";
                   if (!c.rational(phi_hat(r)[n], RationalFunction(alt[L]) * nf, where)) return;
                 }
               }
             });

  ncsf_entry(out, "PHI-HE", "images of h(x) and e(x), and multiplicativity of the three maps", 7, [](Checker& c, unsigned N) {
    if (!c.series(phi(h_series(N)), classical_exp(N), json{{"case", "Phi(h)"}})) return;
    if (!c.series(phi_q(h_series(N)), exp_q(N), json{{"case", "Phi_q(h)"}})) return;
    if (!c.series(phi_q(e_series(N)), Exp_q(N), json{{"case", "Phi_q(e)"}})) return;
    if (!c.series(phi_hat(h_series(N)), sec_plus_tan(N), json{{"case", "Phi_hat(h)"}})) return;
    if (!c.series(phi_hat(e_series(N)), sec_plus_tan(N), json{{"case", "Phi_hat(e)"}})) return;
    const unsigned half = N / 2;
    for (unsigned a = 1; a <= half; ++a) {
      for (const auto& K : compositions_of(static_cast<int>(a))) {
        for (const auto& L : compositions_of(static_cast<int>(N - a))) {
          NcsfElement x = r_elem(K, N), z = r_elem(L, N);
          json where{{"K", K.to_string()}, {"L", L.to_string()}};
          where["map"] = "Phi";
          if (!c.series(phi(x * z), phi(x) * phi(z), where)) return;
          where["map"] = "Phi_q";
          if (!c.series(phi_q(x * z), phi_q(x) * phi_q(z), where)) return;
        }
      }
    }
  });
}

void add_action_entries(std::vector<RegistryEntry>& out) {
  const Poly y = pv(Var::y), t = pv(Var::t);

  per_n(out, "MFS-ORBIT", "actions", "orbit identity: des sum times (1+y)^(dasc+ddes) = padded-letter product sum", 1, 7,
        false, [=](Checker& c, int n, const json&) {
          for (const auto& orbit : mfs_orbits(n)) {
            auto pc = padded_counts(orbit.front(), Padding::inf_inf);
            Poly des_sum;
            for (const auto& p : orbit) des_sum += t.pow(des(p));
            Poly lhs = des_sum * one_plus(y).pow(pc.dasc + pc.ddes);
            if (!c.poly(lhs, padded_orbit_sum(orbit), with_case(n, "orbit", "seed", orbit.front().to_string()))) return;
          }
        });

  per_n(out, "MFS-PI", "actions", "(pk,des) identity on MFS-invariant classes: S_n, Av_n(231), 2-stack-sortable, random orbit unions",
        1, 7, true, [=](Checker& c, int n, const json& p) {
          std::vector<std::pair<std::string, std::vector<Permutation>>> classes = {
              {"S_n", all_permutations(n)},
              {"av231", class_members(n, ClassSelector::av231())},
              {"stack2", class_members(n, ClassSelector::stack2())},
          };
          auto orbits = mfs_orbits(n);
          Rng rng(seed_of(p) + static_cast<std::uint64_t>(n));
          for (int i = 0; i < 10; ++i) classes.emplace_back("orbit union " + std::to_string(i), union_of(orbits, rng));
          for (const auto& [name, pi] : classes) {
            std::set<Permutation> members(pi.begin(), pi.end());
            if (!c.holds(is_mfs_closed(members), at(n, name + " invariant"))) return;
            Poly lhs = one_plus(y).pow(n + 1) * generate_polynomial("eulerian", n, ClassSelector::of(pi));
            Poly rhs = cleared_pkdes(generate_polynomial("pkdes", n, ClassSelector::of(pi)), n);
            if (!c.poly(lhs, rhs, at(n, name))) return;
          }
        });

  per_n(out, "MFS-INVOLUTION", "actions", "each phi'_x is an involution preserving pk, and they commute", 1, 6, false,
        [](Checker& c, int n, const json&) {
          for (const auto& p : enumerate_sn(n)) {
            for (int x = 1; x <= n; ++x) {
              Permutation a = phi_prime(p, x);
              bool ok = phi_prime(a, x) == p && pk(a) == pk(p);
              for (int x2 = x + 1; x2 <= n && ok; ++x2) ok = phi_prime(phi_prime(p, x2), x) == phi_prime(a, x2);
              json where = with_case(n, "perm", "perm", p.to_string());
              where["x"] = x;
              if (!c.holds(ok, where)) return;
            }
          }
        });

  per_n(out, "MFS-ORBIT-SIZE", "actions", "orbits partition S_n, are closed, and have size 2^(dasc+ddes)", 1, 6, false,
        [](Checker& c, int n, const json&) {
          std::set<Permutation> seen;
          for (const auto& orbit : mfs_orbits(n)) {
            auto pc = padded_counts(orbit.front(), Padding::inf_inf);
            json where = with_case(n, "orbit", "seed", orbit.front().to_string());
            if (!c.integer(Integer(static_cast<long>(orbit.size())), Integer(1) << (pc.dasc + pc.ddes), where)) return;
            std::set<Permutation> members(orbit.begin(), orbit.end());
            if (!c.holds(is_mfs_closed(members), where)) return;
            for (const auto& p : orbit) {
              if (!c.holds(seen.insert(p).second, where)) return;
            }
          }
          c.integer(Integer(static_cast<long>(seen.size())), factorial(u(n)), at(n, "cover"));
        });

  per_n(out, "VINCULAR-CONST", "actions", "occurrences of 23-1 and 13-2 are constant on MFS orbits", 1, 7, false,
        [](Checker& c, int n, const json&) {
          for (const auto& orbit : mfs_orbits(n)) {
            for (const char* st : {"23-1", "13-2"}) {
              int v0 = statistic_value(orbit.front(), st);
              bool same = std::all_of(orbit.begin(), orbit.end(), [&](const Permutation& p) { return statistic_value(p, st) == v0; });
              if (!c.holds(same, with_case(n, st, "seed", orbit.front().to_string()))) return;
            }
          }
        });

  out.push_back({"MFS-ST-REFINED", "actions",
                 "w-refined (pk,des) identity on invariant classes for 23-1 and 13-2; inv must break it",
                 json{{"min_n", 1}, {"max_n", 5}, {"seed", kDefaultSeed}}, [=](Checker& c, const json& p) {
                   auto [lo, hi] = n_range(p);
                   bool inv_broke = false;
                   for (int n = lo; n <= hi && c.ok(); ++n) {
                     std::vector<std::pair<std::string, std::vector<Permutation>>> classes = {
                         {"av231", class_members(n, ClassSelector::av231())},
                         {"stack2", class_members(n, ClassSelector::stack2())},
                     };
                     auto orbits = mfs_orbits(n);
                     Rng rng(seed_of(p) + static_cast<std::uint64_t>(n));
                     for (int i = 0; i < 5; ++i) classes.emplace_back("orbit union " + std::to_string(i), union_of(orbits, rng));
                     for (const auto& [name, pi] : classes) {
                       for (const char* st : {"23-1", "13-2"}) {
                         Poly lhs = one_plus(y).pow(n + 1) * generate_polynomial_refined("eulerian", pi, st);
                         Poly rhs = cleared_pkdes(generate_polynomial_refined("pkdes", pi, st), n);
                         if (!c.poly(lhs, rhs, at(n, name + " " + st))) return;
                       }
                     }
                     auto all = all_permutations(n);
                     Poly lhs = one_plus(y).pow(n + 1) * generate_polynomial_refined("eulerian", all, "inv");
                     Poly rhs = cleared_pkdes(generate_polynomial_refined("pkdes", all, "inv"), n);
                     inv_broke = inv_broke || lhs != rhs;
                   }
                   // inv is not orbit-constant from n = 2 on, so the refinement must fail there.
                   if (hi >= 2 && c.ok()) c.holds(inv_broke, json{{"case", "inv control"}, {"reason", "inv refinement held"}});
                 }});

  per_n(out, "PA-LPKDES", "actions", "B(Pi;y,t) = cleared (lpk,des) sum over Pi, for S_n and random Pi", 0, 6, true,
        [](Checker& c, int n, const json& p) {
          for (const auto& [name, pi] : sign_classes(n, p, 20, 5, 6)) {
            Poly rhs = cleared_lpkdes(generate_polynomial("lpkdes", n, ClassSelector::of(pi)), n);
            if (!c.poly(signed_sum(pi, false), rhs, at(n, name))) return;
          }
        });

  per_n(out, "PA-LPK", "actions", "B(Pi;t) = sum over Pi of (4t)^lpk (1+t)^(n-2lpk)", 0, 6, true,
        [](Checker& c, int n, const json& p) {
          for (const auto& [name, pi] : sign_classes(n, p, 20, 5, 6)) {
            Poly rhs = cleared_lpk(generate_polynomial("lpk", n, ClassSelector::of(pi)), n);
            if (!c.poly(at_y1(signed_sum(pi, false)), rhs, at(n, name))) return;
          }
        });

  per_n(out, "PA-LPVD", "actions", "F(Pi;y,t) = (1+yt)(1+yt^2)^(n-1) P^(lpk,val,des)(Pi^rc;Y,Z,T)", 1, 5, true,
        [=](Checker& c, int n, const json& p) {
          auto point = lpkvaldes_point();
          RationalFunction factor(one_plus(y * t) * one_plus(y * t * t).pow(n - 1));
          for (const auto& [name, pi] : sign_classes(n, p, 20, 5, 5)) {
            RationalFunction rhs =
                factor * substitute(generate_polynomial("lpkvaldes", n, ClassSelector::of(rc_of(pi))), point);
            if (!c.rational(RationalFunction(signed_sum(pi, true)), rhs, at(n, name))) return;
          }
        });

  per_n(out, "PA-UDR", "actions", "2t F(Pi;t) = (1+t) sum over Pi^rc of (2t)^udr (1+t^2)^(n-udr)", 1, 6, true,
        [=](Checker& c, int n, const json& p) {
          for (const auto& [name, pi] : sign_classes(n, p, 20, 5, 6)) {
            Poly rhs = one_plus(t) * cleared_udr(generate_polynomial("udr", n, ClassSelector::of(rc_of(pi))), n);
            if (!c.poly(2 * t * at_y1(signed_sum(pi, true)), rhs, at(n, name))) return;
          }
        });

  per_n(out, "PA-ST", "actions",
        "w-refined sign-action identities for 23-1, 13-2 and inv; the fdes form pairs st(pi) with the statistics of pi^rc",
        1, 5, true, [=](Checker& c, int n, const json& p) {
          auto point = lpkvaldes_point();
          RationalFunction factor(one_plus(y * t) * one_plus(y * t * t).pow(n - 1));
          for (const auto& [name, pi] : sign_classes(n, p, 5, 5, 5)) {
            for (const char* st : {"23-1", "13-2", "inv"}) {
              Poly lhs = signed_sum(pi, false, st);
              Poly rhs = cleared_lpkdes(generate_polynomial_refined("lpkdes", pi, st), n);
              if (!c.poly(lhs, rhs, at(n, name + " desB " + st))) return;
              RationalFunction f_rhs = factor * substitute(lpkvaldes_of_rc(pi, st), point);
              if (!c.rational(RationalFunction(signed_sum(pi, true, st)), f_rhs, at(n, name + " fdes " + st))) return;
            }
          }
        });

  per_n(out, "LEM-BDES", "actions", "type B descents of every sigma in B(pi) are read off 0 pi infinity exactly once", 1, 5,
        false, [](Checker& c, int n, const json&) {
          for (const auto& p : enumerate_sn(n)) {
            for (const auto& s : sign_orbit(p)) {
              auto pred = bdes_prediction(s);
              std::vector<int> sorted = pred;
              std::sort(sorted.begin(), sorted.end());
              bool no_dup = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
              json where = with_case(n, "sigma", "sigma", s.to_string());
              if (!c.holds(no_dup && sorted == descent_set_b(s), where)) return;
            }
          }
        });

  per_n(out, "LEM-PADDED", "actions", "letter classes of infinity pi infinity and 0 pi infinity against pk, lpk and n", 1, 7,
        false, [](Checker& c, int n, const json&) {
          for (const auto& p : enumerate_sn(n)) {
            auto a = padded_counts(p, Padding::inf_inf);
            auto b = padded_counts(p, Padding::zero_inf);
            bool ok = a.pk == pk(p) && a.val == pk(p) + 1 && a.pk + a.val + a.dasc + a.ddes == n && b.pk == lpk(p) &&
                      b.val == lpk(p) && b.pk + b.val + b.dasc + b.ddes == n;
            if (!c.holds(ok, with_case(n, "perm", "perm", p.to_string()))) return;
          }
        });
}

void add_bijection_entries(std::vector<RegistryEntry>& out) {
  per_n(out, "LEM-PBT", "bijections", "des+1 = nlc and pk = tc through the decreasing binary tree", 1, 7, false,
        [](Checker& c, int n, const json&) {
          for (const auto& p : enumerate_sn(n)) {
            auto s = tree_stats(theta_tilde(p));
            if (!c.holds(des(p) + 1 == s.nlc && pk(p) == s.tc, with_case(n, "perm", "perm", p.to_string()))) return;
          }
        });

  per_n(out, "THETA-BIJ", "bijections", "Theta is a bijection Av_n(231) -> binary trees; post-order labels detect 231", 1, 7,
        false, [](Checker& c, int n, const json&) {
          std::set<std::string> images;
          for (const auto& p : enumerate_sn(n)) {
            auto labels = theta_tilde(p).postorder_labels();
            bool increasing = std::is_sorted(labels.begin(), labels.end());
            json where = with_case(n, "perm", "perm", p.to_string());
            if (!c.holds(increasing == avoids_231(p), where)) return;
            if (!avoids_231(p)) continue;
            BinaryTree tr = theta(p);
            if (!c.holds(theta_inverse(tr) == p, where)) return;
            if (!c.holds(images.insert(tr.to_string()).second, where)) return;
          }
          std::set<std::string> trees;
          for (const auto& tr : enumerate_trees(n)) trees.insert(tr.to_string());
          c.holds(images == trees, at(n, "image"));
        });

  per_n(out, "LEM-DYCK", "bijections", "des+1 = pk and pk = hk through Psi on Av_n(231)", 1, 8, false,
        [](Checker& c, int n, const json&) {
          for (const auto& p : av231_bruteforce(n)) {
            auto s = dyck_stats(psi(p));
            if (!c.holds(des(p) + 1 == s.pk && pk(p) == s.hk, with_case(n, "perm", "perm", p.to_string()))) return;
          }
        });

  per_n(out, "PSI-BIJ", "bijections", "Psi maps Av_n(231) onto the Dyck paths of semilength n injectively", 1, 8, false,
        [](Checker& c, int n, const json&) {
          std::set<DyckPath> images;
          for (const auto& p : av231_bruteforce(n)) {
            if (!c.holds(images.insert(psi(p)).second, with_case(n, "perm", "perm", p.to_string()))) return;
          }
          auto all = enumerate_dyck(n);
          c.holds(images == std::set<DyckPath>(all.begin(), all.end()), at(n, "image"));
        });

  per_n(out, "INV-DES-231", "bijections", "des(pi) = des(pi^-1) on Av_n(231)", 1, 8, false, [](Checker& c, int n, const json&) {
    for (const auto& p : av231_bruteforce(n)) {
      if (!c.holds(des(p) == des(inverse(p)), with_case(n, "perm", "perm", p.to_string()))) return;
    }
  });

  per_n(out, "STACK-SORT", "bijections", "1-stack-sortable = Av(231), 2-stack-sortable = Av(2341, 3-bar5-241)", 1, 6, false,
        [](Checker& c, int n, const json&) {
          for (const auto& p : enumerate_sn(n)) {
            json where = with_case(n, "perm", "perm", p.to_string());
            if (!c.holds(is_r_stack_sortable(p, 1) == avoids_231(p), where)) return;
            if (!c.holds(is_r_stack_sortable(p, 2) == in_av_2341_and_barred(p), where)) return;
          }
        });

  per_n(out, "CATALAN-COUNT", "bijections", "|Av_n(231)| = #trees = #Dyck paths = Catalan(n)", 0, 10, false,
        [](Checker& c, int n, const json&) {
          Integer cat = catalan(u(n));
          if (!c.integer(cat, Integer(static_cast<long>(av231_via_trees(n).size())), at(n, "av231 via trees"))) return;
          if (!c.integer(cat, Integer(static_cast<long>(enumerate_trees(n).size())), at(n, "trees"))) return;
          if (!c.integer(cat, Integer(static_cast<long>(enumerate_dyck(n).size())), at(n, "dyck"))) return;
          if (n <= 8) c.integer(cat, Integer(static_cast<long>(av231_bruteforce(n).size())), at(n, "brute force"));
        });
}

}  // namespace descentlab::detail
