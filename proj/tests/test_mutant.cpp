// Linked against the library built with one sign flipped in the
// inclusion-exclusion for beta(L); the registry has to notice.

#include <gtest/gtest.h>

#include "descentlab/identities.hpp"

using namespace descentlab;

TEST(Mutant, RegistryReportsAFailureWithWitness) {
  auto reports = run_suite("all");
  int failures = 0;
  for (const auto& r : reports) {
    if (r.pass) continue;
    ++failures;
    EXPECT_TRUE(r.witness.is_object()) << r.id;
    EXPECT_FALSE(r.witness.empty()) << r.id;
  }
  EXPECT_GE(failures, 1);
}

TEST(Mutant, DescentClassWitnessNamesTheComposition) {
  auto r = verify_identity("LEM-DESPRE");
  ASSERT_FALSE(r.pass);
  EXPECT_NE(r.witness.dump().find("("), std::string::npos);
}
