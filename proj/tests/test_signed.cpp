#include <gtest/gtest.h>

#include "descentlab/families.hpp"
#include "descentlab/signed.hpp"

using namespace descentlab;

TEST(Signed, WorkedExample) {
  auto s = SignedPermutation::parse("-4,7,2,-6,-3,5,1");
  auto st = signed_stats(s);
  EXPECT_EQ(st.des_b, 4);
  EXPECT_EQ(st.fdes, 7);
  EXPECT_EQ(st.neg, 3);
  EXPECT_EQ(s.to_string(), "-4,7,2,-6,-3,5,1");
}

TEST(Signed, ParseRejectsNonPermutations) {
  EXPECT_THROW(SignedPermutation::parse("1,-1"), std::invalid_argument);
  EXPECT_THROW(SignedPermutation::parse("0,1"), std::invalid_argument);
  EXPECT_THROW(SignedPermutation::parse("1,3"), std::invalid_argument);
}

TEST(Signed, FdesFormula) {
  // fdes = 2 des_B - [pi_1 < 0]
  for (int n = 1; n <= 5; ++n) {
    for (const auto& s : enumerate_bn(n)) {
      auto st = signed_stats(s);
      ASSERT_EQ(st.fdes, 2 * st.des_b - (s(1) < 0 ? 1 : 0)) << s.to_string();
    }
  }
}

TEST(Signed, EnumerationSizes) {
  EXPECT_EQ(enumerate_bn(0).size(), 1u);
  EXPECT_EQ(enumerate_bn(4).size(), 384u);
  EXPECT_THROW(enumerate_bn(kMaxEnumerateBn + 1), std::length_error);
}

TEST(Signed, SignMaskOrder) {
  auto p = Permutation::parse("2 1 3");
  EXPECT_EQ(with_signs(p, 0).to_string(), "2,1,3");
  EXPECT_EQ(with_signs(p, 1).to_string(), "2,1,-3");
  EXPECT_EQ(with_signs(p, 4).to_string(), "-2,1,3");
}

TEST(Signed, PolynomialsAtYOne) {
  // B_n(1,1) = 2^n n!, and B_n(0,t) is the type-A descent polynomial shifted by one
  const std::map<Var, Rational> one{{Var::y, Rational(1)}, {Var::t, Rational(1)}};
  EXPECT_EQ(b_poly(4).evaluate(one), 384);
  EXPECT_EQ(f_poly(4).evaluate(one), 384);
  Poly b0 = b_poly(5).substitute(Var::y, Poly(0));
  Poly a = generate_polynomial("eulerian", 5);
  Poly shifted;
  EXPECT_TRUE(a.divide_exact(Poly::var(Var::t), shifted));
  EXPECT_EQ(b0, shifted);
}
