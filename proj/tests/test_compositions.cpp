#include <map>

#include <gtest/gtest.h>

#include "descentlab/composition.hpp"
#include "descentlab/permutation.hpp"
#include "descentlab/qcalc.hpp"

using namespace descentlab;

TEST(Composition, SetRoundTrip) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& L : compositions_of(n)) {
      EXPECT_EQ(comp_from_set(set_from_comp(L), n), L);
      EXPECT_EQ(L.size(), n);
    }
  }
  EXPECT_EQ(compositions_of(0).size(), 1u);
  EXPECT_EQ(compositions_of(6).size(), 32u);
}

TEST(Composition, ParseAndPrint) {
  auto L = Composition::parse("(2,1,3)");
  EXPECT_EQ(L, Composition({2, 1, 3}));
  EXPECT_EQ(L.to_string(), "(2,1,3)");
  EXPECT_THROW(Composition({2, 0}), std::invalid_argument);
}

TEST(Composition, RefinementIsSubsetOfDescentSets) {
  Composition L({1, 2, 1});
  EXPECT_TRUE(leq_refinement(Composition({3, 1}), L));
  EXPECT_TRUE(leq_refinement(Composition({4}), L));
  EXPECT_FALSE(leq_refinement(Composition({2, 2}), L));
  EXPECT_EQ(coarsenings(L).size(), 4u);
  for (const auto& K : coarsenings(L)) EXPECT_TRUE(leq_refinement(K, L));
}

TEST(Composition, MultinomialCountsPermutationsWithDescentsInSet) {
  // number of p with Des(p) inside Des(L) is n!/(L_1! ... L_k!)
  for (int n = 1; n <= 7; ++n) {
    std::map<Composition, Integer> exact;
    for (const auto& p : PermutationStream(n)) exact[comp(p)] += 1;
    for (const auto& L : compositions_of(n)) {
      Integer below = 0;
      for (const auto& K : coarsenings(L)) below += exact[K];
      EXPECT_EQ(below, multinomial(L)) << L.to_string();
      EXPECT_EQ(exact[L], beta(L)) << L.to_string();
    }
  }
}

TEST(Composition, QMultinomialCountsInversionsOverPrefixClasses) {
  const Poly q = Poly::var(Var::q);
  for (int n = 1; n <= 6; ++n) {
    std::map<Composition, Poly> exact;
    for (const auto& p : PermutationStream(n)) exact[comp(p)] += q.pow(inv(p));
    for (const auto& L : compositions_of(n)) {
      Poly below;
      for (const auto& K : coarsenings(L)) below += exact[K];
      EXPECT_EQ(below, q_multinomial(static_cast<unsigned>(n), L)) << L.to_string();
      EXPECT_EQ(exact[L], beta_q(L)) << L.to_string();
    }
  }
}

TEST(Composition, BetaHatCountsAlternatingDescentClasses) {
  for (int n = 1; n <= 7; ++n) {
    std::map<Composition, Integer> exact;
    for (const auto& p : PermutationStream(n)) exact[alt_comp(p)] += 1;
    for (const auto& L : compositions_of(n)) EXPECT_EQ(exact[L], beta_hat(L)) << L.to_string();
  }
}

TEST(Composition, StatisticsDependOnlyOnTheDescentComposition) {
  const std::pair<DescentStat, int (*)(const Permutation&)> stats[] = {
      {DescentStat::des, des}, {DescentStat::pk, pk}, {DescentStat::lpk, lpk},
      {DescentStat::val, val}, {DescentStat::udr, udr}, {DescentStat::br, br}};
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : PermutationStream(n)) {
      for (const auto& [st, f] : stats) ASSERT_EQ(stat_of_composition(comp(p), st), f(p)) << p.to_string();
    }
  }
}

TEST(Composition, CanonicalPermutationHasTheComposition) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& L : compositions_of(n)) EXPECT_EQ(comp(canonical_perm(L)), L);
  }
}
