#include <algorithm>
#include <map>
#include <set>

#include "descentlab/actions.hpp"
#include "descentlab/composition.hpp"
#include "descentlab/families.hpp"
#include "descentlab/qcalc.hpp"
#include "descentlab/series.hpp"
#include "descentlab/trees_paths.hpp"
#include "registry_detail.hpp"

namespace descentlab::detail {

namespace {

using PerN = std::function<void(Checker&, int)>;

void per_n(std::vector<RegistryEntry>& out, std::string id, std::string statement, int lo, int hi, PerN f) {
  out.push_back({std::move(id), "polynomial", std::move(statement), json{{"min_n", lo}, {"max_n", hi}},
                 [f](Checker& c, const json& p) {
                   auto [a, b] = n_range(p);
                   for (int n = a; n <= b && c.ok(); ++n) f(c, n);
                 }});
}

// sum_k C(n,k) x^k y^(n-k) g(k)
template <class G>
Poly binomial_sum(int n, const Poly& x, const Poly& y, G g) {
  Poly s;
  for (int k = 0; k <= n; ++k) s += Poly(binomial(n, k)) * x.pow(k) * y.pow(n - k) * g(k);
  return s;
}

Poly sign_alternating(int n, int k, const Poly& p) { return (n - k) % 2 == 0 ? p : -p; }

Poly count_table(const std::vector<Permutation>& perms, const std::function<Monomial(const Permutation&)>& m) {
  std::map<Monomial, long> counts;
  for (const auto& p : perms) ++counts[m(p)];
  std::vector<Poly::Term> terms;
  for (const auto& [k, v] : counts) terms.emplace_back(k, Integer(v));
  return Poly::from_terms(std::move(terms));
}

Poly q_power(int e) { return Poly::var(Var::q, static_cast<unsigned>(e)); }

// Closed count of Catalan objects with k "two-children" features and j of the
// other statistic, with the j-offset of the display being checked.
Integer closed_count(int n, int k, int j, int offset) {
  return binomial(2 * k, k) * binomial(n - 1, 2 * k) * binomial(n - 2 * k - 1, j - k - offset) / (k + 1);
}

Poly js_bruteforce(int n) { return generate_polynomial("eulerian", n, ClassSelector::stack2()); }

}  // namespace

void add_polynomial_entries(std::vector<RegistryEntry>& out) {
  const Poly y = pv(Var::y), t = pv(Var::t), v = pv(Var::v);

  per_n(out, "EUL-PK", "2^(n+1) A_n(t) = sum over S_n of (4t)^(pk+1) (1+t)^(n-1-2pk)", 1, 8, [](Checker& c, int n) {
    c.poly(Poly(Integer(1) << (n + 1)) * eulerian(n), cleared_pk(generate_polynomial("pk", n), n), at(n));
  });

  per_n(out, "EUL-LPK", "sum_k C(n,k) 2^k (1-t)^(n-k) A_k(t) = sum over S_n of (4t)^lpk (1+t)^(n-2lpk)", 0, 8,
        [t](Checker& c, int n) {
          Poly lhs = binomial_sum(n, Poly(2), one_minus(t), [](int k) { return eulerian(k); });
          c.poly(lhs, cleared_lpk(generate_polynomial("lpk", n), n), at(n));
        });

  per_n(out, "EUL-BR", "birun polynomial vs Eulerian polynomial under t = (1-v^2)/(1+v^2)", 2, 8,
        [v](Checker& c, int n) {
          const Poly v2 = v * v;
          RationalFunction tv(one_minus(v2), one_plus(v2));
          RationalFunction lhs = substitute(generate_polynomial("br", n), {{Var::t, tv}});
          RationalFunction arg(one_minus(v), one_plus(v));
          RationalFunction rhs = RationalFunction(one_plus(v).pow(n + 1)) / RationalFunction(one_plus(v2).pow(n - 1)) *
                                 substitute(eulerian(n), {{Var::t, arg}});
          c.rational(lhs, rhs, at(n));
        });

  per_n(out, "BNA", "B_n(y,t) = sum_k C(n,k) (1+y)^k (1-t)^(n-k) A_k(t)", 0, 6, [y, t](Checker& c, int n) {
    c.poly(b_full(n), binomial_sum(n, one_plus(y), one_minus(t), [](int k) { return eulerian(k); }), at(n));
  });

  per_n(out, "BNA-1", "B_n(t) = sum_k C(n,k) 2^k (1-t)^(n-k) A_k(t)", 0, 6, [t](Checker& c, int n) {
    c.poly(at_y1(b_full(n)), binomial_sum(n, Poly(2), one_minus(t), [](int k) { return eulerian(k); }), at(n));
  });

  per_n(out, "FNA", "t(1+t) F_n(y,t) = (1+y)^n A_n(t^2) + t sum_k C(n,k) (1+y)^k (1-t^2)^(n-k) A_k(t^2)", 1, 6,
        [y, t](Checker& c, int n) {
          Poly rhs = one_plus(y).pow(n) * t_squared(eulerian(n)) +
                     t * binomial_sum(n, one_plus(y), one_minus(t * t), [](int k) { return t_squared(eulerian(k)); });
          c.poly(t * one_plus(t) * f_full(n), rhs, at(n));
        });

  per_n(out, "FNAN-S", "t F_n(t) = (1+t)^n A_n(t)", 1, 6, [t](Checker& c, int n) {
    c.poly(t * at_y1(f_full(n)), one_plus(t).pow(n) * eulerian(n), at(n));
  });

  per_n(out, "FNB", "t(1+t) F_n(y,t) = t B_n(y,t^2) + sum_k (-1)^(n-k) C(n,k) (1-t^2)^(n-k) B_k(y,t^2)", 1, 6,
        [t](Checker& c, int n) {
          Poly alt;
          for (int k = 0; k <= n; ++k) {
            alt += sign_alternating(n, k, Poly(binomial(n, k)) * one_minus(t * t).pow(n - k) * t_squared(b_full(k)));
          }
          c.poly(t * one_plus(t) * f_full(n), t * t_squared(b_full(n)) + alt, at(n));
        });

  per_n(out, "FNB-1", "2^n t F_n(t) = (1+t)^n sum_k (-1)^(n-k) C(n,k) (1-t)^(n-k) B_k(t)", 1, 6,
        [t](Checker& c, int n) {
          Poly alt;
          for (int k = 0; k <= n; ++k) {
            alt += sign_alternating(n, k, Poly(binomial(n, k)) * one_minus(t).pow(n - k) * at_y1(b_full(k)));
          }
          c.poly(Poly(Integer(1) << n) * t * at_y1(f_full(n)), one_plus(t).pow(n) * alt, at(n));
        });

  per_n(out, "ANB", "2^n A_n(t) = sum_k (-1)^(n-k) C(n,k) (1-t)^(n-k) B_k(t)", 0, 6, [t](Checker& c, int n) {
    Poly alt;
    for (int k = 0; k <= n; ++k) {
      alt += sign_alternating(n, k, Poly(binomial(n, k)) * one_minus(t).pow(n - k) * at_y1(b_full(k)));
    }
    c.poly(Poly(Integer(1) << n) * eulerian(n), alt, at(n));
  });

  per_n(out, "PKDES", "(1+y)^(n+1) A_n(t) = cleared (pk,des) sum over S_n", 1, 8, [y](Checker& c, int n) {
    c.poly(one_plus(y).pow(n + 1) * eulerian(n), cleared_pkdes(generate_polynomial("pkdes", n), n), at(n));
  });

  per_n(out, "LPKDES", "sum_k C(n,k) (1+y)^k (1-t)^(n-k) A_k(t) = cleared (lpk,des) sum over S_n", 0, 8,
        [y, t](Checker& c, int n) {
          Poly lhs = binomial_sum(n, one_plus(y), one_minus(t), [](int k) { return eulerian(k); });
          c.poly(lhs, cleared_lpkdes(generate_polynomial("lpkdes", n), n), at(n));
        });

  per_n(out, "LPKDES-B", "B_n(y,t) = cleared (lpk,des) sum over S_n", 0, 6, [](Checker& c, int n) {
    c.poly(b_full(n), cleared_lpkdes(generate_polynomial("lpkdes", n), n), at(n));
  });

  per_n(out, "UDR-A", "2(1+t)^(n-1) A_n(t) = sum over S_n of (2t)^udr (1+t^2)^(n-udr)", 1, 8, [t](Checker& c, int n) {
    c.poly(2 * one_plus(t).pow(n - 1) * eulerian(n), cleared_udr(generate_polynomial("udr", n), n), at(n));
  });

  per_n(out, "LPVD", "(lpk,val,des) polynomial at (Y,Z,T) against Eulerian sums in t^2", 1, 7, [y, t](Checker& c, int n) {
    const Poly t2 = t * t;
    Poly num = one_plus(y).pow(n) * t_squared(eulerian(n)) +
               t * binomial_sum(n, one_plus(y), one_minus(t2), [](int k) { return t_squared(eulerian(k)); });
    RationalFunction lhs(num, t);
    RationalFunction rhs = RationalFunction(one_plus(y * t) * one_plus(t) * one_plus(y * t2).pow(n - 1)) *
                           substitute(generate_polynomial("lpkvaldes", n), lpkvaldes_point());
    c.rational(lhs, rhs, at(n));
  });

  per_n(out, "LPVD-F", "F_n(y,t) = (1+yt)(1+yt^2)^(n-1) P^(lpk,val,des)(Y,Z,T)", 1, 6, [y, t](Checker& c, int n) {
    RationalFunction rhs = RationalFunction(one_plus(y * t) * one_plus(y * t * t).pow(n - 1)) *
                           substitute(generate_polynomial("lpkvaldes", n), lpkvaldes_point());
    c.rational(RationalFunction(f_full(n)), rhs, at(n));
  });

  per_n(out, "F-UDR", "2t F_n(t) = (1+t) sum over S_n of (2t)^udr (1+t^2)^(n-udr)", 1, 6, [t](Checker& c, int n) {
    c.poly(2 * t * at_y1(f_full(n)), one_plus(t) * cleared_udr(generate_polynomial("udr", n), n), at(n));
  });

  per_n(out, "PKDES-231", "(1+y)^(n+1) N_n(t) = cleared (pk,des) sum over Av_n(231)", 1, 9, [y](Checker& c, int n) {
    c.poly(one_plus(y).pow(n + 1) * narayana(n),
           cleared_pkdes(generate_polynomial("pkdes", n, ClassSelector::av231()), n), at(n));
  });

  per_n(out, "PKDES-2SS", "(1+y)^(n+1) JS_n(t) = cleared (pk,des) sum over 2-stack-sortable permutations", 1, 7,
        [y](Checker& c, int n) {
          c.poly(one_plus(y).pow(n + 1) * js_2ss(n),
                 cleared_pkdes(generate_polynomial("pkdes", n, ClassSelector::stack2()), n), at(n));
        });

  per_n(out, "PKDES-ST", "w-refined (pk,des) identity on S_n for occurrences of 23-1 and 13-2", 1, 6,
        [y](Checker& c, int n) {
          auto perms = all_permutations(n);
          for (const char* st : {"23-1", "13-2"}) {
            Poly lhs = one_plus(y).pow(n + 1) * generate_polynomial_refined("eulerian", perms, st);
            Poly rhs = cleared_pkdes(generate_polynomial_refined("pkdes", perms, st), n);
            if (!c.poly(lhs, rhs, at(n, st))) return;
          }
        });

  per_n(out, "CLOSED-231", "closed (pk,des) polynomial and coefficient count on Av_n(231)", 1, 10,
        [](Checker& c, int n) {
          Poly brute = generate_polynomial("pkdes", n, ClassSelector::av231());
          if (!c.poly(closed_231(n), brute, at(n, "polynomial"))) return;
          // count with k peaks and j descents
          for (int k = 0; 2 * k <= n - 1; ++k) {
            for (int j = 0; j <= n - 1; ++j) {
              Monomial m = Monomial::of(Var::y, k + 1) * Monomial::of(Var::t, j + 1);
              json w = at(n, "count");
              w["pk"] = k;
              w["des"] = j;
              if (!c.integer(closed_count(n, k, j, 0), brute.coefficient(m), w)) return;
            }
          }
        });

  per_n(out, "TCNLC", "binary trees by (tc, nlc): Narayana identity, closed form and counts", 1, 9,
        [y](Checker& c, int n) {
          Poly T = generate_polynomial("tree_tcnlc", n);
          if (!c.poly(one_plus(y).pow(n + 1) * narayana(n), cleared_pkdes(T, n), at(n, "cleared"))) return;
          if (!c.poly(T, closed_231(n), at(n, "closed"))) return;
          for (int k = 0; 2 * k <= n - 1; ++k) {
            for (int j = 1; j <= n; ++j) {
              json w = at(n, "count");
              w["tc"] = k;
              w["nlc"] = j;
              Monomial m = Monomial::of(Var::y, k + 1) * Monomial::of(Var::t, j);
              if (!c.integer(closed_count(n, k, j, 1), T.coefficient(m), w)) return;
            }
          }
        });

  per_n(out, "HKPK", "Dyck paths by (hk, pk): Narayana identity, closed form and counts", 1, 9,
        [y](Checker& c, int n) {
          Poly D = generate_polynomial("dyck_hkpk", n);
          if (!c.poly(one_plus(y).pow(n + 1) * narayana(n), cleared_pkdes(D, n), at(n, "cleared"))) return;
          if (!c.poly(D, closed_231(n), at(n, "closed"))) return;
          for (int k = 0; 2 * k <= n - 1; ++k) {
            for (int j = 1; j <= n; ++j) {
              json w = at(n, "count");
              w["hk"] = k;
              w["pk"] = j;
              Monomial m = Monomial::of(Var::y, k + 1) * Monomial::of(Var::t, j);
              if (!c.integer(closed_count(n, k, j, 1), D.coefficient(m), w)) return;
            }
          }
        });

  per_n(out, "NARAYANA", "closed Narayana polynomial = descent polynomial of Av_n(231)", 1, 9, [](Checker& c, int n) {
    std::vector<Permutation> av;
    for (const auto& p : enumerate_sn(n)) {
      if (avoids_231(p)) av.push_back(p);
    }
    Poly brute = count_table(av, [](const Permutation& p) { return Monomial::of(Var::t, des(p) + 1); });
    c.poly(narayana(n), brute, at(n));
  });

  per_n(out, "JS-2SS", "closed two-stack-sortable descent polynomial = brute force", 1, 7, [](Checker& c, int n) {
    c.poly(js_2ss(n), js_bruteforce(n), at(n));
  });

  out.push_back({"FUNC-EQ", "polynomial", "G = x(yG^2 + tG + G + t) for G the (pk,des)/y series of Av_n(231)",
                 json{{"degree", 8}}, [y, t](Checker& c, const json& p) {
                   unsigned N = degree_of(p);
                   std::vector<RationalFunction> g(N + 1);
                   for (unsigned n = 1; n <= N; ++n) {
                     Poly P = generate_polynomial("pkdes", static_cast<int>(n), ClassSelector::av231());
                     Poly q;
                     if (!P.divide_exact(y, q)) throw std::logic_error("(pk,des) polynomial not divisible by y");
                     g[n] = RationalFunction(q);
                   }
                   TruncatedSeries G(g);
                   TruncatedSeries inner = RationalFunction(y) * (G * G) + RationalFunction(t + Poly(1)) * G +
                                           TruncatedSeries::constant(RationalFunction(t), N);
                   std::vector<RationalFunction> shifted(N + 1);
                   for (unsigned k = 1; k <= N; ++k) shifted[k] = inner[k - 1];
                   c.series(G, TruncatedSeries(shifted), json{{"degree", N}});
                 }});

  per_n(out, "LEM-UDR", "udr = lpk+val+1, lpk = floor(udr/2), val = floor((udr-1)/2), last-descent rule", 1, 8,
        [](Checker& c, int n) {
          for (const auto& p : enumerate_sn(n)) {
            int u = udr(p), l = lpk(p), w = val(p);
            bool last_des = n >= 2 && p(n - 1) > p(n);
            bool ok = u == l + w + 1 && l == u / 2 && w == (u - 1) / 2 && (last_des ? l == w + 1 : l == w);
            json where = at(n);
            where["perm"] = p.to_string();
            if (!c.holds(ok, where)) return;
          }
        });

  per_n(out, "LEM-DESCONT", "#{Comp(pi) <= L} = multinomial and its inv-refinement = q-multinomial", 0, 7,
        [](Checker& c, int n) {
          std::map<Composition, std::pair<Integer, Poly>> tally;
          for (const auto& p : enumerate_sn(n)) {
            auto& e = tally[comp(p)];
            e.first += 1;
            e.second += q_power(inv(p));
          }
          for (const auto& L : compositions_of(n)) {
            Integer count = 0;
            Poly qsum;
            for (const auto& [K, e] : tally) {
              if (leq_refinement(K, L)) {
                count += e.first;
                qsum += e.second;
              }
            }
            json where = at(n);
            where["L"] = L.to_string();
            if (!c.integer(multinomial(L), count, where)) return;
            if (!c.poly(q_multinomial(static_cast<unsigned>(n), L), qsum, where)) return;
          }
        });

  per_n(out, "LEM-DESPRE", "beta, beta_q and beta_hat by inclusion-exclusion = brute-force class counts", 0, 7,
        [](Checker& c, int n) {
          std::map<Composition, Integer> count, alt;
          std::map<Composition, Poly> qsum;
          for (const auto& p : enumerate_sn(n)) {
            Composition L = comp(p);
            count[L] += 1;
            qsum[L] += q_power(inv(p));
            alt[alt_comp(p)] += 1;
          }
          for (const auto& L : compositions_of(n)) {
            json where = at(n);
            where["L"] = L.to_string();
            if (!c.integer(beta(L), count[L], where)) return;
            if (!c.poly(beta_q(L), qsum[L], where)) return;
            if (!c.integer(beta_hat(L), alt[L], where)) return;
          }
        });

  per_n(out, "Q-MULT", "q-multinomial = inversion sum over words of the multiset 1^L1 2^L2 ...", 0, 7,
        [](Checker& c, int n) {
          for (const auto& L : compositions_of(n)) {
            std::vector<int> word;
            for (int i = 0; i < L.length(); ++i) word.insert(word.end(), static_cast<std::size_t>(L[i]), i + 1);
            Poly s;
            do {
              int inversions = 0;
              for (std::size_t i = 0; i < word.size(); ++i) {
                for (std::size_t j = i + 1; j < word.size(); ++j) inversions += word[i] > word[j] ? 1 : 0;
              }
              s += q_power(inversions);
            } while (std::next_permutation(word.begin(), word.end()));
            json where = at(n);
            where["L"] = L.to_string();
            if (!c.poly(q_multinomial(static_cast<unsigned>(n), L), s, where)) return;
          }
        });

  per_n(out, "EULER-NUM", "boustrophedon E_n = #alternating permutations = n! [x^n](sec x + tan x)", 0, 9,
        [](Checker& c, int n) {
          auto E = euler_numbers(static_cast<unsigned>(n));
          Integer alternating = 0;
          for (const auto& p : enumerate_sn(n)) {
            bool ok = true;
            for (int i = 1; i < n && ok; ++i) ok = (i % 2 == 1) ? p(i) < p(i + 1) : p(i) > p(i + 1);
            if (ok) alternating += 1;
          }
          if (!c.integer(E[static_cast<std::size_t>(n)], alternating, at(n, "alternating"))) return;
          auto s = sec_plus_tan(static_cast<unsigned>(n));
          c.rational(s[static_cast<unsigned>(n)],
                     RationalFunction(Rational(E[static_cast<std::size_t>(n)], factorial(static_cast<unsigned>(n)))),
                     at(n, "sec+tan"));
        });

  per_n(out, "IMAJ-EQ", "inv and imaj are equidistributed on every descent class", 0, 7, [](Checker& c, int n) {
    std::map<std::vector<int>, std::pair<Poly, Poly>> by_class;
    for (const auto& p : enumerate_sn(n)) {
      auto& e = by_class[descent_set(p)];
      e.first += q_power(inv(p));
      e.second += q_power(imaj(p));
    }
    for (const auto& [S, e] : by_class) {
      json where = at(n);
      where["descent_set"] = S;
      if (!c.poly(e.first, e.second, where)) return;
    }
  });

  per_n(out, "FAMILY-COUNTS", "every family at all variables = 1 counts its class", 0, 7, [](Checker& c, int n) {
    std::map<Var, Rational> ones;
    for (std::size_t i = 0; i < kNumVars; ++i) ones[static_cast<Var>(i)] = 1;
    const Integer nf = factorial(static_cast<unsigned>(n));
    const Integer signed_count = nf << n;
    const Integer cat = catalan(static_cast<unsigned>(n));
    for (const auto& fam : family_names()) {
      Integer expect = nf;
      if (fam == "b_poly" || fam == "f_poly") expect = signed_count;
      if (fam == "narayana" || fam == "closed_231" || fam == "tree_tcnlc" || fam == "dyck_hkpk") expect = cat;
      if (fam == "js_2ss") expect = static_cast<long>(class_members(n, ClassSelector::stack2()).size());
      if (n == 0 && fam == "closed_231") continue;
      Rational value = generate_polynomial(fam, n).evaluate(ones);
      json where = at(n, fam);
      if (!c.integer(expect, value.get_num(), where)) return;
    }
  });

  per_n(out, "Q-SPECIALIZE", "q = 1 in every q-family gives the unrefined family", 0, 6, [](Checker& c, int n) {
    for (const auto& fam : family_names()) {
      if (fam.rfind("q_", 0) != 0) continue;
      std::string base = fam.substr(2);
      if (!c.poly(generate_polynomial(fam, n).substitute(Var::q, Poly(1)), generate_polynomial(base, n), at(n, fam))) return;
    }
  });

  per_n(out, "PKDES-Y1", "y = 1 in the cleared (pk,des) form gives the cleared peak form", 1, 7, [](Checker& c, int n) {
    c.poly(at_y1(cleared_pkdes(generate_polynomial("pkdes", n), n)), cleared_pk(generate_polynomial("pk", n), n), at(n));
  });
}

}  // namespace descentlab::detail
