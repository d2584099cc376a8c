#include <set>

#include <gtest/gtest.h>

#include "descentlab/families.hpp"
#include "descentlab/trees_paths.hpp"

using namespace descentlab;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }

}  // namespace

TEST(Catalan, Numbers) {
  std::vector<long> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (unsigned n = 0; n < expected.size(); ++n) EXPECT_EQ(catalan(n), expected[n]);
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(enumerate_trees(n).size(), catalan(static_cast<unsigned>(n)).get_ui());
    EXPECT_EQ(enumerate_dyck(n).size(), catalan(static_cast<unsigned>(n)).get_ui());
  }
}

TEST(Trees, WorkedExample) {
  auto tr = theta_tilde(P("1 3 2 4 9 5 8 7 6"));
  auto st = tree_stats(tr);
  EXPECT_EQ(st.nlc, 5);
  EXPECT_EQ(st.tc, 3);
  auto unl = theta(P("1 3 2 4 9 5 8 7 6"));
  EXPECT_EQ(unl.size(), 9);
  EXPECT_EQ(tree_stats(unl).nlc, 5);
}

TEST(Trees, IdentityIsARightChain) {
  auto st = tree_stats(theta_tilde(Permutation::identity(6)));
  EXPECT_EQ(st.nlc, 1);
  EXPECT_EQ(st.tc, 0);
}

TEST(Trees, StringRoundTrip) {
  for (const auto& tr : enumerate_trees(5)) EXPECT_EQ(BinaryTree::parse(tr.to_string()), tr);
  auto labeled = theta_tilde(P("2 3 1"));
  EXPECT_EQ(BinaryTree::parse(labeled.to_string()), labeled);
}

TEST(Trees, DescentsAndPeaksOnAllPermutations) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : PermutationStream(n)) {
      auto st = tree_stats(theta_tilde(p));
      ASSERT_EQ(st.nlc, des(p) + 1) << p.to_string();
      ASSERT_EQ(st.tc, pk(p)) << p.to_string();
    }
  }
}

TEST(Trees, ThetaIsABijectionOntoTrees) {
  for (int n = 0; n <= 7; ++n) {
    std::set<std::string> image;
    for (const auto& p : class_members(n, ClassSelector::av231())) {
      auto tr = theta(p);
      ASSERT_EQ(theta_inverse(tr), p);
      image.insert(tr.to_string());
    }
    EXPECT_EQ(image.size(), catalan(static_cast<unsigned>(n)).get_ui());
  }
  EXPECT_THROW(theta(P("2 3 1")), std::invalid_argument);
}

TEST(Trees, PostorderCharacterisesAvoidance) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : PermutationStream(n)) {
      auto labels = theta_tilde(p).postorder_labels();
      ASSERT_EQ(std::is_sorted(labels.begin(), labels.end()), avoids_231(p)) << p.to_string();
    }
  }
}

TEST(Dyck, WorkedExamples) {
  auto d = psi(P("2 1 9 4 3 8 5 6 7"));
  EXPECT_EQ(d.word(), "UDUUDDUUUUDUDDUDDD");
  EXPECT_EQ(dyck_stats(d).pk, 5);
  EXPECT_EQ(dyck_stats(d).hk, 2);
  auto e = dyck_stats(DyckPath("UUDUUUDDDDUD"));
  EXPECT_EQ(e.pk, 3);
  EXPECT_EQ(e.hk, 1);
}

TEST(Dyck, InvalidWords) {
  EXPECT_THROW(DyckPath("DU"), std::invalid_argument);
  EXPECT_THROW(DyckPath("UUD"), std::invalid_argument);
  EXPECT_THROW(DyckPath("UXDD"), std::invalid_argument);
}

TEST(Dyck, PsiIsABijectionCarryingStatistics) {
  for (int n = 0; n <= 8; ++n) {
    std::set<DyckPath> image;
    for (const auto& p : class_members(n, ClassSelector::av231())) {
      auto d = psi(p);
      ASSERT_EQ(d.semilength(), n);
      if (n > 0) {
        auto s = dyck_stats(d);
        ASSERT_EQ(s.pk, des(p) + 1) << p.to_string();
        ASSERT_EQ(s.hk, pk(p)) << p.to_string();
      }
      image.insert(d);
    }
    EXPECT_EQ(image.size(), catalan(static_cast<unsigned>(n)).get_ui()) << n;
  }
}

TEST(Dyck, Av231FromTreesMatchesPatternFilter) {
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(av231_via_trees(n), class_members(n, ClassSelector::av231()));
}
