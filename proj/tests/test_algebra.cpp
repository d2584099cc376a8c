#include <random>

#include <gtest/gtest.h>

#include "descentlab/poly.hpp"
#include "descentlab/qcalc.hpp"
#include "descentlab/rational.hpp"
#include "descentlab/series.hpp"

using namespace descentlab;

namespace {

Poly random_poly(std::mt19937_64& rng, unsigned max_deg = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, static_cast<int>(max_deg));
  Poly p;
  for (int i = 0; i < 4; ++i) {
    Monomial m;
    m.set(Var::y, static_cast<unsigned>(deg(rng)));
    m.set(Var::t, static_cast<unsigned>(deg(rng)));
    p += Poly::monomial(Integer(coeff(rng)), m);
  }
  return p;
}

const Poly t = Poly::var(Var::t);
const Poly y = Poly::var(Var::y);
const Poly q = Poly::var(Var::q);

}  // namespace

TEST(Poly, PrintsInAscendingOrder) {
  Poly p = t + Poly(11) * t.pow(2) + Poly(11) * t.pow(3) + t.pow(4);
  EXPECT_EQ(p.to_string(), "t + 11*t^2 + 11*t^3 + t^4");
  EXPECT_EQ(Poly().to_string(), "0");
}

TEST(Poly, ParseRoundTrip) {
  for (const char* s : {"t + 11*t^2 + 11*t^3 + t^4", "-3*y*t^2 + q", "7"}) {
    EXPECT_EQ(Poly::parse(Poly::parse(s).to_string()), Poly::parse(s)) << s;
  }
}

TEST(Poly, JsonRoundTrip) {
  Poly p = Poly(3) * y * t - Poly(2) * q.pow(4) + Poly(1);
  EXPECT_EQ(Poly::from_json(p.to_json()), p);
}

TEST(Poly, BinomialExpansion) {
  Poly p = (Poly(1) + t).pow(5);
  EXPECT_EQ(p.coefficient(Monomial::of(Var::t, 2)), 10);
  EXPECT_EQ(p.evaluate(std::map<Var, Rational>{{Var::t, Rational(1)}}), 32);
}

TEST(Poly, RingAxiomsOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Poly, ExactDivisionInvertsMultiplication) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Poly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    Poly quotient;
    ASSERT_TRUE((a * b).divide_exact(b, quotient));
    EXPECT_EQ(quotient, a);
  }
  Poly quotient;
  EXPECT_FALSE((t + Poly(1)).divide_exact(t, quotient));
}

TEST(Poly, SubstituteAndTruncate) {
  Poly p = (Poly(1) + y * t).pow(3);
  EXPECT_EQ(p.substitute(Var::y, Poly(1)), (Poly(1) + t).pow(3));
  EXPECT_EQ(p.truncate(Var::t, 1), Poly(1) + Poly(3) * y * t);
  EXPECT_EQ(p.coefficient_of(Var::t, 2), Poly(3) * y.pow(2));
}

TEST(RationalFunction, EqualityIsByCrossMultiplication) {
  RationalFunction a(Poly(1) - t.pow(2), Poly(1) - t);
  EXPECT_EQ(a, RationalFunction(Poly(1) + t));
  RationalFunction b(t, Poly(1) + t);
  EXPECT_EQ(b + RationalFunction(Poly(1), Poly(1) + t), RationalFunction(1));
  EXPECT_EQ(b * b.inverse(), RationalFunction(1));
  EXPECT_FALSE(RationalFunction(t) == RationalFunction(y));
}

TEST(RationalFunction, SubstitutionMatchesEvaluation) {
  Poly p = Poly(1) + y * t + t.pow(2);
  std::map<Var, RationalFunction> subs{{Var::t, RationalFunction(Poly(2) * t, Poly(1) + t.pow(2))}};
  RationalFunction r = substitute(p, subs);
  std::map<Var, Rational> pt{{Var::t, Rational(1, 3)}, {Var::y, Rational(2)}};
  Rational inner(2 * 3, 10);  // 2t/(1+t^2) at t=1/3 is 3/5
  inner.canonicalize();
  EXPECT_EQ(r.evaluate(pt), 1 + 2 * inner + inner * inner);
}

TEST(Series, ExpTimesExpOfMinusXIsOne) {
  auto e = classical_exp(8);
  EXPECT_EQ(e * e.scale_argument(RationalFunction(-1)), TruncatedSeries::constant(RationalFunction(1), 8));
}

TEST(Series, QExponentialsAreInverse) {
  // exp_q(x) Exp_q(-x) = 1
  auto prod = exp_q(6) * Exp_q(6).scale_argument(RationalFunction(-1));
  EXPECT_EQ(prod, TruncatedSeries::constant(RationalFunction(1), 6));
}

TEST(Series, ReciprocalOfUnit) {
  auto s = TruncatedSeries::constant(RationalFunction(1), 6) - RationalFunction(t) * classical_exp(6);
  EXPECT_EQ(s * s.reciprocal(), TruncatedSeries::constant(RationalFunction(1), 6));
  EXPECT_THROW(TruncatedSeries::zero(3).reciprocal(), std::domain_error);
}

TEST(Series, SecPlusTanCoefficientsAreEulerNumbers) {
  auto s = sec_plus_tan(9);
  auto e = euler_numbers(9);
  for (unsigned n = 0; n <= 9; ++n) {
    EXPECT_EQ(s[n], RationalFunction(Rational(e[n], factorial(n)))) << n;
  }
}

TEST(QCalc, EulerNumbers) {
  std::vector<long> expected{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
  auto e = euler_numbers(9);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(e[i], expected[i]);
}

TEST(QCalc, QFactorialSpecialisesToFactorial) {
  for (unsigned n = 0; n <= 8; ++n) {
    EXPECT_EQ(q_factorial(n).evaluate(std::map<Var, Rational>{{Var::q, Rational(1)}}), Rational(factorial(n)));
  }
}

TEST(QCalc, InverseQFactorial) {
  for (unsigned n = 0; n <= 7; ++n) {
    EXPECT_EQ(inverse_q_factorial(n) * RationalFunction(q_factorial(n)), RationalFunction(1)) << n;
  }
}

TEST(QCalc, QBinomialSymmetryAndPascal) {
  for (unsigned n = 1; n <= 7; ++n) {
    for (unsigned k = 1; k < n; ++k) {
      EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
      EXPECT_EQ(q_binomial(n, k), q_binomial(n - 1, k - 1) + q.pow(k) * q_binomial(n - 1, k));
    }
  }
}

TEST(QCalc, CyclotomicProduct) {
  for (unsigned n = 1; n <= 12; ++n) {
    Poly prod(1);
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic(d);
    }
    EXPECT_EQ(prod, q.pow(n) - Poly(1)) << n;
  }
}

TEST(QCalc, BinomialOutsideRangeIsZero) {
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(10, 3), 120);
}
