#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "descentlab/rational.hpp"
#include "descentlab/series.hpp"

namespace descentlab {

using nlohmann::json;

struct IdentityReport {
  std::string id;
  json params = json::object();
  bool pass = true;
  json witness;  // null on pass

  json to_json() const;
};

// Single-coefficient tampering of one side, used to prove the runner can fail.
enum class Perturb { none, lhs, rhs };

// Records the first mismatch of a verification run.
class Checker {
 public:
  explicit Checker(Perturb perturb = Perturb::none) : perturb_(perturb) {}

  bool poly(const Poly& lhs, const Poly& rhs, const json& where);
  bool rational(const RationalFunction& lhs, const RationalFunction& rhs, const json& where);
  bool series(const TruncatedSeries& lhs, const TruncatedSeries& rhs, const json& where);
  bool integer(const Integer& lhs, const Integer& rhs, const json& where);
  bool holds(bool condition, const json& where);
  bool close(double lhs, double rhs, double rel_tol, const json& where);

  bool ok() const { return witness_.is_null(); }
  const json& witness() const { return witness_; }

 private:
  bool take_perturbation(Perturb side);
  void fail(json w);

  Perturb perturb_;
  bool perturbed_ = false;
  json witness_;
};

inline constexpr int kSuiteMaxN = 10;
inline constexpr std::uint64_t kDefaultSeed = 24301;
inline constexpr int kSuiteMaxDegree = 7;

struct SuiteOptions {
  std::optional<int> max_n;          // lowers every entry's n bound
  std::optional<int> series_degree;  // lowers every series entry's degree
  std::uint64_t seed = kDefaultSeed;
  Perturb perturb = Perturb::none;
  unsigned jobs = 1;
};

struct RegistryEntry {
  std::string id;
  std::string category;  // polynomial, series, ncsf, actions, bijections, numeric
  std::string statement;
  json defaults;  // e.g. {"min_n":1,"max_n":8} or {"degree":6}
  std::function<void(Checker&, const json& params)> run;
};

const std::vector<RegistryEntry>& registry();
std::vector<std::string> suite_names();

// params may narrow the defaults: "n" picks a single size, "max_n"/"degree"
// lower the bound, "seed" feeds randomized entries. Exceeding a bound throws.
IdentityReport verify_identity(std::string_view id, const json& params = json::object(),
                               Perturb perturb = Perturb::none);

// Reports in registry order. Throws on an empty or unknown selector.
std::vector<IdentityReport> run_suite(std::string_view selector, const SuiteOptions& opts = {});

// Ids accepted by numeric_spot_check.
std::vector<std::string> inverse_form_ids();

// Float check of one radical inverse form at one point for sizes in [min_n, max_n].
// Throws std::domain_error("point outside branch domain") off the admissible region.
IdentityReport numeric_spot_check(std::string_view id, const std::map<Var, Rational>& point,
                                  int min_n = -1, int max_n = -1);

}  // namespace descentlab
