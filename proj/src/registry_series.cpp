#include "descentlab/families.hpp"
#include "descentlab/qcalc.hpp"
#include "descentlab/series.hpp"
#include "registry_detail.hpp"

namespace descentlab::detail {

namespace {

using Build = std::function<void(Checker&, unsigned)>;

void by_degree(std::vector<RegistryEntry>& out, std::string id, std::string statement, unsigned degree, Build f) {
  out.push_back({std::move(id), "series", std::move(statement), json{{"degree", degree}},
                 [f](Checker& c, const json& p) { f(c, degree_of(p)); }});
}

template <class F>
TruncatedSeries series_of(unsigned N, F coeff) {
  std::vector<RationalFunction> c(N + 1);
  for (unsigned n = 0; n <= N; ++n) c[n] = coeff(static_cast<int>(n));
  return TruncatedSeries(std::move(c));
}

RationalFunction inv_factorial(int n) { return RationalFunction(Rational(1, factorial(static_cast<unsigned>(n)))); }

RationalFunction iqf(int n) { return inverse_q_factorial(static_cast<unsigned>(n)); }

TruncatedSeries one(unsigned N) { return TruncatedSeries::constant(RationalFunction(1), N); }

TruncatedSeries one_minus_times(const RationalFunction& a, const TruncatedSeries& s) {
  return one(s.trunc_degree()) - a * s;
}

json deg(unsigned N) { return json{{"degree", N}}; }

}  // namespace

void add_series_entries(std::vector<RegistryEntry>& out) {
  const Poly y = pv(Var::y), t = pv(Var::t);
  const RationalFunction T(t), omt(one_minus(t));

  by_degree(out, "EGF-A", "sum A_n x^n/n! = (1-t)/(1 - t e^((1-t)x))", 7, [=](Checker& c, unsigned N) {
    auto lhs = series_of(N, [](int n) { return RationalFunction(eulerian(n)) * inv_factorial(n); });
    auto rhs = omt * one_minus_times(T, classical_exp(N).scale_argument(omt)).reciprocal();
    c.series(lhs, rhs, deg(N));
  });

  by_degree(out, "EGF-B", "sum B_n(t)/(1-t)^(n+1) x^n/n! = e^x/(1 - t e^(2x))", 6, [=](Checker& c, unsigned N) {
    auto lhs = series_of(N, [&](int n) {
      return RationalFunction(at_y1(b_full(n)), one_minus(t).pow(n + 1)) * inv_factorial(n);
    });
    auto rhs = classical_exp(N) * one_minus_times(T, classical_exp(N).scale_argument(2)).reciprocal();
    c.series(lhs, rhs, deg(N));
  });

  by_degree(out, "EGF-F", "sum F_n(t)/((1-t)(1-t^2)^n) x^n/n! = e^x/(1 - t e^x)", 6, [=](Checker& c, unsigned N) {
    auto lhs = series_of(N, [&](int n) {
      return RationalFunction(at_y1(f_full(n)), one_minus(t) * one_minus(t * t).pow(n)) * inv_factorial(n);
    });
    auto rhs = classical_exp(N) * one_minus_times(T, classical_exp(N)).reciprocal();
    c.series(lhs, rhs, deg(N));
  });

  by_degree(out, "EGF-BY", "sum B_n(y,t)/(1-t)^(n+1) x^n/n! = e^x/(1 - t e^((1+y)x))", 6, [=](Checker& c, unsigned N) {
    auto lhs = series_of(N, [&](int n) { return RationalFunction(b_full(n), one_minus(t).pow(n + 1)) * inv_factorial(n); });
    auto rhs = classical_exp(N) * one_minus_times(T, classical_exp(N).scale_argument(rf(one_plus(y)))).reciprocal();
    c.series(lhs, rhs, deg(N));
  });

  by_degree(out, "EGF-FY", "sum F_n(y,t)/((1-t)(1-t^2)^n) x^n/n! = (e^x + t e^((1+y)x))/(1 - t^2 e^((1+y)x))", 6,
            [=](Checker& c, unsigned N) {
              auto lhs = series_of(N, [&](int n) {
                return RationalFunction(f_full(n), one_minus(t) * one_minus(t * t).pow(n)) * inv_factorial(n);
              });
              auto ey = classical_exp(N).scale_argument(rf(one_plus(y)));
              auto rhs = (classical_exp(N) + T * ey) * one_minus_times(RationalFunction(t * t), ey).reciprocal();
              c.series(lhs, rhs, deg(N));
            });

  by_degree(out, "EGF-AQ", "sum A_n(q,t) x^n/[n]_q! = (1-t)/(1 - t exp_q((1-t)x))", 6, [=](Checker& c, unsigned N) {
    auto lhs = series_of(N, [](int n) { return RationalFunction(generate_polynomial("q_eulerian", n)) * iqf(n); });
    auto rhs = omt * one_minus_times(T, exp_q(N).scale_argument(omt)).reciprocal();
    c.series(lhs, rhs, deg(N));
  });

  by_degree(out, "Q-PKDES", "(1-t)/(1 - t Exp_q(yx) exp_q(x)) against the (inv,pk,des) polynomials at (U,V)", 6,
            [=](Checker& c, unsigned N) {
              auto lhs = omt * one_minus_times(T, Exp_q(N).scale_argument(rf(y)) * exp_q(N)).reciprocal();
              auto rhs = series_of(N, [&](int n) {
                if (n == 0) return RationalFunction(1);
                Poly cleared = cleared_pkdes(generate_polynomial("q_pkdes", n), n);
                return RationalFunction(cleared, one_plus(y) * one_minus(t).pow(n)) * iqf(n);
              });
              c.series(lhs, rhs, deg(N));
            });

  by_degree(out, "Q-PK", "(1-t)/(1 - t Exp_q(x) exp_q(x)) against the (inv,pk) polynomials at 4t/(1+t)^2", 6,
            [=](Checker& c, unsigned N) {
              auto lhs = omt * one_minus_times(T, Exp_q(N) * exp_q(N)).reciprocal();
              auto rhs = series_of(N, [&](int n) {
                if (n == 0) return RationalFunction(1);
                Poly cleared = cleared_pk(generate_polynomial("q_pk", n), n);
                return RationalFunction(cleared, 2 * one_minus(t).pow(n)) * iqf(n);
              });
              c.series(lhs, rhs, deg(N));
            });

  by_degree(out, "Q-LPKDES", "(1-t) exp_q(x)/(1 - t Exp_q(yx) exp_q(x)) against the (inv,lpk,des) polynomials at (U,V)", 6,
            [=](Checker& c, unsigned N) {
              auto lhs = omt * exp_q(N) * one_minus_times(T, Exp_q(N).scale_argument(rf(y)) * exp_q(N)).reciprocal();
              auto rhs = series_of(N, [&](int n) {
                Poly cleared = cleared_lpkdes(generate_polynomial("q_lpkdes", n), n);
                return RationalFunction(cleared, one_minus(t).pow(n)) * iqf(n);
              });
              c.series(lhs, rhs, deg(N));
            });

  by_degree(out, "Q-LPK", "(1-t) exp_q(x)/(1 - t Exp_q(x) exp_q(x)) against the (inv,lpk) polynomials at 4t/(1+t)^2", 6,
            [=](Checker& c, unsigned N) {
              auto lhs = omt * exp_q(N) * one_minus_times(T, Exp_q(N) * exp_q(N)).reciprocal();
              auto rhs = series_of(N, [&](int n) {
                Poly cleared = cleared_lpk(generate_polynomial("q_lpk", n), n);
                return RationalFunction(cleared, one_minus(t).pow(n)) * iqf(n);
              });
              c.series(lhs, rhs, deg(N));
            });

  by_degree(out, "Q-UDR", "(1-t)(1 + t exp_q(x))/(1 - t^2 exp_q(x) Exp_q(x)) against the (inv,udr) polynomials", 6,
            [=](Checker& c, unsigned N) {
              auto e = exp_q(N);
              auto lhs = omt * (one(N) + T * e) * one_minus_times(RationalFunction(t * t), e * Exp_q(N)).reciprocal();
              auto rhs = series_of(N, [&](int n) {
                if (n == 0) return RationalFunction(1);
                Poly cleared = one_plus(t) * cleared_udr(generate_polynomial("q_udr", n), n);
                return RationalFunction(cleared, 2 * one_minus(t * t).pow(n)) * iqf(n);
              });
              c.series(lhs, rhs, deg(N));
            });

  by_degree(out, "Q-LPVD",
            "(1-t)(1 + t exp_q(x))/(1 - t^2 exp_q(x) Exp_q(yx)) against the (inv,lpk,val,des) polynomials at (Y,Z,T)", 5,
            [=](Checker& c, unsigned N) {
              auto e = exp_q(N);
              auto lhs = omt * (one(N) + T * e) *
                         one_minus_times(RationalFunction(t * t), e * Exp_q(N).scale_argument(rf(y))).reciprocal();
              auto point = lpkvaldes_point();
              auto rhs = series_of(N, [&](int n) {
                if (n == 0) return RationalFunction(1);
                RationalFunction factor(t * one_plus(y * t) * one_plus(y * t * t).pow(n - 1), one_minus(t * t).pow(n));
                return factor * substitute(generate_polynomial("q_lpkvaldes", n), point) * iqf(n);
              });
              c.series(lhs, rhs, deg(N));
            });

  by_degree(out, "EGF-ALT", "sum Ahat_n x^n/n! = (1-t)/(1 - t (sec+tan)((1-t)x))", 7, [=](Checker& c, unsigned N) {
    auto lhs = series_of(N, [](int n) { return RationalFunction(generate_polynomial("alt_eulerian", n)) * inv_factorial(n); });
    auto rhs = omt * one_minus_times(T, sec_plus_tan(N).scale_argument(omt)).reciprocal();
    c.series(lhs, rhs, deg(N));
  });

  // Prefix of the t-series to order 3n+4: (1-t)^(n+1) times the partial sum,
  // truncated, must reproduce B_n(y,t).
  out.push_back({"BARS-B", "series", "B_n(y,t)/(1-t)^(n+1) = sum_k (ky+k+1)^n t^k, t-prefix to order 3n+4",
                 json{{"min_n", 0}, {"max_n", 6}}, [=](Checker& c, const json& p) {
                   auto [lo, hi] = n_range(p);
                   for (int n = lo; n <= hi && c.ok(); ++n) {
                     const int M = 3 * n + 4;
                     Poly partial;
                     for (int k = 0; k <= M; ++k) partial += (Poly(k) * y + Poly(k + 1)).pow(n) * t.pow(k);
                     Poly lhs = b_full(n).truncate(Var::t, M);
                     Poly rhs = (one_minus(t).pow(n + 1) * partial).truncate(Var::t, M);
                     c.poly(lhs, rhs, at(n));
                   }
                 }});

  out.push_back({"BARS-F", "series",
                 "F_n(y,t)/((1-t)(1-t^2)^n) = sum_k (ky+k+1)^n t^(2k) + sum_k ((k+1)(y+1))^n t^(2k+1), t-prefix to order 3n+4",
                 json{{"min_n", 0}, {"max_n", 6}}, [=](Checker& c, const json& p) {
                   auto [lo, hi] = n_range(p);
                   for (int n = lo; n <= hi && c.ok(); ++n) {
                     const int M = 3 * n + 4;
                     Poly partial;
                     for (int k = 0; 2 * k <= M; ++k) {
                       partial += (Poly(k) * y + Poly(k + 1)).pow(n) * t.pow(2 * k);
                       partial += (Poly(k + 1) * one_plus(y)).pow(n) * t.pow(2 * k + 1);
                     }
                     Poly lhs = f_full(n).truncate(Var::t, M);
                     Poly rhs = (one_minus(t) * one_minus(t * t).pow(n) * partial).truncate(Var::t, M);
                     c.poly(lhs, rhs, at(n));
                   }
                 }});
}

}  // namespace descentlab::detail
