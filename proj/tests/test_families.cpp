#include <gtest/gtest.h>

#include "descentlab/families.hpp"

using namespace descentlab;

namespace {

const Poly t = Poly::var(Var::t);
const Poly y = Poly::var(Var::y);

Poly brute(int n, const ClassSelector& sel, bool with_pk) {
  Poly s;
  for (const auto& p : class_members(n, sel)) s += (with_pk ? y.pow(pk(p) + 1) : Poly(1)) * t.pow(des(p) + 1);
  return s;
}

}  // namespace

namespace descentlab {
void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace descentlab

TEST(Families, EulerianFour) {
  EXPECT_EQ(generate_polynomial("eulerian", 4).to_string(), "t + 11*t^2 + 11*t^3 + t^4");
  EXPECT_EQ(generate_polynomial("eulerian", 0), Poly(1));
}

TEST(Families, ClassSizes) {
  std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  std::vector<std::size_t> two_stack{1, 1, 2, 6, 22, 91, 408, 1938};
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(class_members(n, ClassSelector::av231()).size(), catalan[static_cast<std::size_t>(n)]);
    EXPECT_EQ(class_members(n, ClassSelector::stack2()).size(), two_stack[static_cast<std::size_t>(n)]);
  }
}

TEST(Families, NarayanaMatchesBruteForce) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(narayana(n), brute(n, ClassSelector::av231(), false)) << n;
}

TEST(Families, ClosedFormsMatchBruteForce) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(closed_231(n), brute(n, ClassSelector::av231(), true)) << n;
    EXPECT_EQ(js_2ss(n), brute(n, ClassSelector::stack2(), false)) << n;
  }
}

TEST(Families, SelectorsFromNames) {
  EXPECT_EQ(ClassSelector::from_name("av231").kind, ClassKind::av231);
  EXPECT_EQ(ClassSelector::from_name("stack2").kind, ClassKind::stack2);
  EXPECT_THROW(ClassSelector::from_name("av123"), std::invalid_argument);
  EXPECT_THROW(generate_polynomial("nope", 3), std::invalid_argument);
}

TEST(Families, RestrictedFamilies) {
  EXPECT_EQ(generate_polynomial("eulerian", 5, ClassSelector::av231()), narayana(5));
  auto orbit = class_members(4, ClassSelector::orbit(Permutation::parse("1 3 4 2")));
  EXPECT_EQ(orbit.size(), 2u);  // 1 and 2 are valleys of inf 1342 inf, 3 a double ascent
}

TEST(Families, RefinedAddsStatisticExponent) {
  auto perms = all_permutations(3);
  Poly refined = generate_polynomial_refined("eulerian", perms, "inv");
  EXPECT_EQ(refined.substitute(Var::w, Poly(1)), generate_polynomial("eulerian", 3));
  EXPECT_EQ(statistic_value(Permutation::parse("3 2 1"), "inv"), 3);
}

TEST(Families, AllNamedFamiliesBuild) {
  for (const auto& name : family_names()) EXPECT_NO_THROW(generate_polynomial(name, 3)) << name;
}
