#include <set>

#include <gtest/gtest.h>

#include "descentlab/actions.hpp"
#include "descentlab/families.hpp"
#include "descentlab/identities.hpp"
#include "descentlab/signed.hpp"

using namespace descentlab;

namespace {

const Poly y = Poly::var(Var::y);
const Poly z = Poly::var(Var::z);
const Poly t = Poly::var(Var::t);
const Poly w = Poly::var(Var::w);

std::map<Var, RationalFunction> lpkvaldes_substitution() {
  const Poly one(1);
  return {
      {Var::y, RationalFunction(t * (one + y) * (y + t), (y + t * t) * (one + y * t))},
      {Var::z, RationalFunction(t * (one + y) * (one + y * t), (one + y * t * t) * (y + t))},
      {Var::t, RationalFunction(y + t * t, one + y * t * t)},
  };
}

Poly fdes_side(const Permutation& p, const std::string& st) {
  Poly s;
  for (const auto& sg : sign_orbit(p)) {
    auto ss = signed_stats(sg);
    s += y.pow(ss.neg) * t.pow(ss.fdes) * w.pow(statistic_value(p, st));
  }
  return s;
}

RationalFunction rc_side(const Permutation& p, const std::string& st, bool w_from_rc) {
  const int n = p.size();
  Permutation r = reverse_complement(p);
  Poly mono = y.pow(lpk(r)) * z.pow(val(r)) * t.pow(des(r)) * w.pow(statistic_value(w_from_rc ? r : p, st));
  RationalFunction factor((Poly(1) + y * t) * (Poly(1) + y * t * t).pow(n - 1));
  return factor * substitute(mono, lpkvaldes_substitution());
}

}  // namespace

TEST(Registry, ContainsEveryAcceptanceId) {
  std::set<std::string> ids;
  for (const auto& e : registry()) EXPECT_TRUE(ids.insert(e.id).second) << "duplicate " << e.id;
  for (const char* id :
       {"EUL-PK", "EUL-LPK", "EUL-BR", "BNA", "BNA-1", "FNA", "FNAN-S", "FNB", "FNB-1", "ANB", "PKDES", "LPKDES",
        "LPKDES-B", "UDR-A", "LPVD", "LPVD-F", "F-UDR", "PKDES-231", "PKDES-2SS", "PKDES-ST", "CLOSED-231", "TCNLC",
        "HKPK", "NARAYANA", "JS-2SS", "EGF-A", "EGF-B", "EGF-F", "EGF-BY", "EGF-FY", "EGF-AQ", "Q-PKDES", "Q-PK",
        "Q-LPKDES", "Q-LPK", "Q-UDR", "Q-LPVD", "EGF-ALT", "BARS-B", "BARS-F", "NCSF-PKDES", "NCSF-LPKDES",
        "NCSF-UDRDES", "NCSF-UDR", "MFS-ORBIT", "MFS-PI", "PA-LPKDES", "PA-LPVD", "LEM-BDES", "PA-ST",
        "MFS-ST-REFINED"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(Registry, SingleIdentityPasses) {
  auto r = verify_identity("EUL-PK", {{"n", 5}});
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.witness.is_null());
  EXPECT_EQ(r.to_json()["status"], "pass");
}

TEST(Registry, ParameterValidation) {
  EXPECT_THROW(verify_identity("NO-SUCH-ID"), std::invalid_argument);
  EXPECT_THROW(verify_identity("EUL-PK", {{"n", 40}}), std::invalid_argument);
  EXPECT_THROW(verify_identity("EUL-PK", {{"bogus", 1}}), std::invalid_argument);
  EXPECT_THROW(verify_identity("EGF-A", {{"degree", 12}}), std::invalid_argument);
}

TEST(Registry, PerturbationIsCaughtWithWitness) {
  for (auto side : {Perturb::lhs, Perturb::rhs}) {
    auto r = verify_identity("PKDES", {{"n", 4}}, side);
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.witness.is_object());
    EXPECT_TRUE(r.witness.contains("monomial"));
    EXPECT_EQ(r.to_json()["status"], "fail");
  }
}

TEST(Registry, SeriesWitnessNamesTheDegree) {
  auto r = verify_identity("EGF-A", {{"degree", 4}}, Perturb::rhs);
  ASSERT_FALSE(r.pass);
  EXPECT_TRUE(r.witness.contains("x_degree"));
}

TEST(Registry, SuiteSelectors) {
  EXPECT_THROW(run_suite(""), std::invalid_argument);
  EXPECT_THROW(run_suite("everything"), std::invalid_argument);
  SuiteOptions opts;
  opts.max_n = 11;
  EXPECT_THROW(run_suite("polynomial", opts), std::invalid_argument);
  for (const auto& name : suite_names()) EXPECT_NO_THROW(run_suite(name, SuiteOptions{3, 3}));
}

TEST(Registry, RunsAreDeterministicAcrossJobCounts) {
  SuiteOptions one{4, 4};
  SuiteOptions many{4, 4};
  many.jobs = 4;
  auto a = run_suite("actions", one);
  auto b = run_suite("actions", many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json(), b[i].to_json());
}

TEST(Registry, SeedChangesRandomClassesOnly) {
  SuiteOptions a{5, 4}, b{5, 4};
  b.seed = 99;
  auto ra = run_suite("numeric", a);
  auto rb = run_suite("numeric", b);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_TRUE(ra[i].pass && rb[i].pass);
    EXPECT_NE(ra[i].params, rb[i].params);
  }
}

TEST(Numeric, DomainGuard) {
  std::map<Var, Rational> bad{{Var::t, Rational(3, 2)}, {Var::y, Rational(1, 2)}};
  EXPECT_THROW(numeric_spot_check("NUM-PKDES", bad), std::domain_error);
  std::map<Var, Rational> zero{{Var::t, Rational(1, 3)}, {Var::y, Rational(0)}};
  EXPECT_THROW(numeric_spot_check("NUM-PKDES", zero), std::domain_error);
  EXPECT_THROW(numeric_spot_check("NUM-NOPE", bad), std::invalid_argument);
}

TEST(Numeric, DiagonalPointIsAdmissible) {
  std::map<Var, Rational> diag{{Var::t, Rational(1, 3)}, {Var::y, Rational(1, 3)}};
  EXPECT_TRUE(numeric_spot_check("NUM-PKDES", diag).pass);
  EXPECT_TRUE(numeric_spot_check("NUM-LPKDES", diag).pass);
}

TEST(Numeric, EveryFormPassesAtAFixedPoint) {
  std::map<Var, Rational> pt{{Var::t, Rational(2, 5)}, {Var::y, Rational(3, 7)}};
  for (const auto& id : inverse_form_ids()) EXPECT_TRUE(numeric_spot_check(id, pt).pass) << id;
}

// The fdes form with the refinement weight read off pi^rc only agrees with the
// sign-action side when st is invariant under reverse-complement.
TEST(SignActionRefinement, WeightMustComeFromPiNotItsReverseComplement) {
  auto p = Permutation::parse("2 3 1");
  RationalFunction lhs(fdes_side(p, "23-1"));
  EXPECT_EQ(lhs, rc_side(p, "23-1", false));
  EXPECT_FALSE(lhs == rc_side(p, "23-1", true));
  // inv is rc-invariant, so both readings agree
  for (const auto& q : all_permutations(4)) {
    EXPECT_EQ(rc_side(q, "inv", true), rc_side(q, "inv", false));
    EXPECT_EQ(RationalFunction(fdes_side(q, "inv")), rc_side(q, "inv", false)) << q.to_string();
  }
}
