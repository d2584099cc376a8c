#include <gtest/gtest.h>

#include "descentlab/ncsf.hpp"
#include "descentlab/qcalc.hpp"

using namespace descentlab;

namespace {

constexpr unsigned N = 5;

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST(Ncsf, ConcatenationProduct) {
  auto a = h_elem(C({2}), N) * h_elem(C({1, 2}), N);
  EXPECT_EQ(a, h_elem(C({2, 1, 2}), N));
  // degree above the truncation vanishes
  EXPECT_EQ(h_elem(C({3}), N) * h_elem(C({3}), N), NcsfElement(N));
}

TEST(Ncsf, RibbonExpansionOfH11) {
  auto r = to_r_basis(h_elem(C({1, 1}), N));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r.at(C({1, 1})), RationalFunction(1));
  EXPECT_EQ(r.at(C({2})), RationalFunction(1));
}

TEST(Ncsf, RibbonRoundTrip) {
  for (int n = 0; n <= static_cast<int>(N); ++n) {
    for (const auto& L : compositions_of(n)) {
      auto r = r_elem(L, N);
      auto back = to_r_basis(r);
      ASSERT_EQ(back.size(), 1u) << L.to_string();
      EXPECT_EQ(back.begin()->first, L);
      EXPECT_EQ(from_r(back, N), r);
    }
  }
}

TEST(Ncsf, ElementaryTimesCompleteIsOne) {
  // h(x) e(-x) = 1
  auto prod = h_series(N) * e_series(N).scale_grading(RationalFunction(-1));
  EXPECT_EQ(prod, NcsfElement::scalar(RationalFunction(1), N));
  EXPECT_EQ(ncsf_inverse_unit(h_series(N)), e_series(N).scale_grading(RationalFunction(-1)));
}

TEST(Ncsf, ElementaryIsASingleRibbon) {
  for (unsigned n = 1; n <= N; ++n) {
    auto r = to_r_basis(e_elem(n, N));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r.begin()->first, C(std::vector<int>(n, 1)));
  }
}

TEST(Ncsf, EBasisHasFullRank) {
  for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(e_basis_rank(n), 1 << (n == 0 ? 0 : n - 1));
}

TEST(Ncsf, PhiOfRibbonIsBeta) {
  for (int n = 0; n <= static_cast<int>(N); ++n) {
    for (const auto& L : compositions_of(n)) {
      auto s = phi(r_elem(L, N));
      EXPECT_EQ(s[static_cast<unsigned>(n)], RationalFunction(Rational(beta(L), factorial(static_cast<unsigned>(n)))));
      auto sq = phi_q(r_elem(L, N));
      EXPECT_EQ(sq[static_cast<unsigned>(n)], RationalFunction(beta_q(L)) * inverse_q_factorial(static_cast<unsigned>(n)));
      auto sh = phi_hat(r_elem(L, N));
      EXPECT_EQ(sh[static_cast<unsigned>(n)], RationalFunction(Rational(beta_hat(L), factorial(static_cast<unsigned>(n)))));
    }
  }
}

TEST(Ncsf, PhiIsMultiplicative) {
  auto a = h_elem(C({1, 2}), N) + RationalFunction(Poly::var(Var::t)) * r_elem(C({2}), N);
  auto b = r_elem(C({1, 1}), N) + NcsfElement::scalar(RationalFunction(3), N);
  EXPECT_EQ(phi(a * b), phi(a) * phi(b));
  EXPECT_EQ(phi_q(a * b), phi_q(a) * phi_q(b));
}

TEST(Ncsf, InverseOfNonUnitThrows) {
  EXPECT_THROW(ncsf_inverse_unit(h_elem(C({1}), N)), std::domain_error);
  EXPECT_THROW(h_elem(C({N + 1}), N), std::invalid_argument);
}
