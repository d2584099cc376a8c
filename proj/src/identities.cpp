#include "descentlab/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "descentlab/families.hpp"
#include "descentlab/qcalc.hpp"
#include "registry_detail.hpp"

namespace descentlab {

namespace {

std::string clip(std::string s, std::size_t limit = 400) {
  if (s.size() > limit) {
    s.resize(limit);
    s += "...";
  }
  return s;
}

json where_json(const json& where) { return where.is_null() ? json::object() : where; }

}  // namespace

json IdentityReport::to_json() const {
  return json{{"id", id}, {"params", params}, {"status", pass ? "pass" : "fail"}, {"witness", witness}};
}

bool Checker::take_perturbation(Perturb side) {
  if (perturbed_ || perturb_ != side) return false;
  perturbed_ = true;
  return true;
}

void Checker::fail(json w) {
  if (witness_.is_null()) witness_ = std::move(w);
}

bool Checker::poly(const Poly& lhs_in, const Poly& rhs_in, const json& where) {
  if (!ok()) return false;
  Poly lhs = lhs_in;
  Poly rhs = rhs_in;
  if (take_perturbation(Perturb::lhs)) lhs += Poly(1);
  if (take_perturbation(Perturb::rhs)) rhs += Poly(1);
  Poly diff = lhs - rhs;
  if (diff.is_zero()) return true;
  const Monomial& m = diff.terms().front().first;
  json w = where_json(where);
  w["monomial"] = m.to_string();
  w["lhs_coefficient"] = lhs.coefficient(m).get_str();
  w["rhs_coefficient"] = rhs.coefficient(m).get_str();
  fail(std::move(w));
  return false;
}

bool Checker::rational(const RationalFunction& lhs_in, const RationalFunction& rhs_in, const json& where) {
  if (!ok()) return false;
  RationalFunction lhs = lhs_in;
  RationalFunction rhs = rhs_in;
  if (take_perturbation(Perturb::lhs)) lhs += RationalFunction(1);
  if (take_perturbation(Perturb::rhs)) rhs += RationalFunction(1);
  Poly cross = RationalFunction::cross_difference(lhs, rhs);
  if (cross.is_zero()) return true;
  json w = where_json(where);
  w["lhs"] = clip(lhs.to_string());
  w["rhs"] = clip(rhs.to_string());
  w["cross_difference_term"] = clip(Poly::from_terms({cross.terms().front()}).to_string());
  fail(std::move(w));
  return false;
}

bool Checker::series(const TruncatedSeries& lhs, const TruncatedSeries& rhs, const json& where) {
  if (!ok()) return false;
  if (lhs.trunc_degree() != rhs.trunc_degree()) {
    json w = where_json(where);
    w["reason"] = "truncation degrees differ";
    fail(std::move(w));
    return false;
  }
  for (unsigned k = 0; k <= lhs.trunc_degree(); ++k) {
    json w = where_json(where);
    w["x_degree"] = k;
    if (!rational(lhs[k], rhs[k], w)) return false;
  }
  return true;
}

bool Checker::integer(const Integer& lhs_in, const Integer& rhs_in, const json& where) {
  if (!ok()) return false;
  Integer lhs = lhs_in;
  Integer rhs = rhs_in;
  if (take_perturbation(Perturb::lhs)) lhs += 1;
  if (take_perturbation(Perturb::rhs)) rhs += 1;
  if (lhs == rhs) return true;
  json w = where_json(where);
  w["lhs"] = lhs.get_str();
  w["rhs"] = rhs.get_str();
  fail(std::move(w));
  return false;
}

bool Checker::holds(bool condition, const json& where) {
  if (!ok()) return false;
  if (take_perturbation(Perturb::lhs) || take_perturbation(Perturb::rhs)) condition = !condition;
  if (condition) return true;
  json w = where_json(where);
  w["reason"] = w.contains("reason") ? w["reason"] : json("condition failed");
  fail(std::move(w));
  return false;
}

bool Checker::close(double lhs, double rhs, double rel_tol, const json& where) {
  if (!ok()) return false;
  if (take_perturbation(Perturb::lhs)) lhs += 1;
  if (take_perturbation(Perturb::rhs)) rhs += 1;
  double err = std::fabs(lhs - rhs);
  if (std::isfinite(err) && err <= rel_tol * std::max(1.0, std::fabs(lhs))) return true;
  json w = where_json(where);
  w["lhs"] = lhs;
  w["rhs"] = rhs;
  w["abs_error"] = err;
  fail(std::move(w));
  return false;
}

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> out;
    detail::add_polynomial_entries(out);
    detail::add_series_entries(out);
    detail::add_ncsf_entries(out);
    detail::add_action_entries(out);
    detail::add_bijection_entries(out);
    detail::add_numeric_entries(out);
    return out;
  }();
  return entries;
}

std::vector<std::string> suite_names() { return {"all", "polynomial", "series", "ncsf", "actions", "bijections", "numeric"}; }

namespace {

const RegistryEntry& find_entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

int as_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw std::invalid_argument("parameter '" + key + "' must be an integer");
  return v.get<int>();
}

json effective_params(const RegistryEntry& e, const json& params) {
  if (!params.is_object()) throw std::invalid_argument("parameters must be an object");
  json eff = e.defaults;
  for (const auto& [key, value] : params.items()) {
    if (key == "n") {
      int n = as_int(value, key);
      if (!eff.contains("max_n")) throw std::invalid_argument(e.id + " takes no size parameter");
      if (n < eff["min_n"].get<int>() || n > eff["max_n"].get<int>()) {
        throw std::invalid_argument("n=" + std::to_string(n) + " is outside the verified range of " + e.id + " [" +
                                    std::to_string(eff["min_n"].get<int>()) + ", " +
                                    std::to_string(eff["max_n"].get<int>()) + "]");
      }
      eff["min_n"] = n;
      eff["max_n"] = n;
    } else if (key == "max_n") {
      int n = as_int(value, key);
      if (!eff.contains("max_n")) throw std::invalid_argument(e.id + " takes no size parameter");
      if (n > eff["max_n"].get<int>()) {
        throw std::invalid_argument("max_n=" + std::to_string(n) + " exceeds the bound " +
                                    std::to_string(eff["max_n"].get<int>()) + " of " + e.id);
      }
      eff["max_n"] = n;
    } else if (key == "degree") {
      int d = as_int(value, key);
      if (!eff.contains("degree")) throw std::invalid_argument(e.id + " takes no degree parameter");
      if (d < 0 || d > eff["degree"].get<int>()) {
        throw std::invalid_argument("degree=" + std::to_string(d) + " exceeds the bound " +
                                    std::to_string(eff["degree"].get<int>()) + " of " + e.id);
      }
      eff["degree"] = d;
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer()) throw std::invalid_argument("seed must be an integer");
      if (eff.contains("seed")) eff["seed"] = value;
    } else {
      throw std::invalid_argument("unknown parameter '" + key + "'");
    }
  }
  return eff;
}

IdentityReport execute(const RegistryEntry& e, const json& eff, Perturb perturb) {
  IdentityReport r;
  r.id = e.id;
  r.params = eff;
  Checker c(perturb);
  try {
    e.run(c, eff);
    r.pass = c.ok();
    r.witness = c.witness();
  } catch (const std::exception& ex) {
    r.pass = false;
    r.witness = json{{"error", ex.what()}};
  }
  return r;
}

}  // namespace

IdentityReport verify_identity(std::string_view id, const json& params, Perturb perturb) {
  const auto& e = find_entry(id);
  return execute(e, effective_params(e, params), perturb);
}

std::vector<IdentityReport> run_suite(std::string_view selector, const SuiteOptions& opts) {
  if (selector.empty()) throw std::invalid_argument("empty suite selector");
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), selector) == names.end()) {
    throw std::invalid_argument("unknown suite '" + std::string(selector) + "'");
  }
  if (opts.max_n && (*opts.max_n < 0 || *opts.max_n > kSuiteMaxN)) {
    throw std::invalid_argument("max-n must lie in [0, " + std::to_string(kSuiteMaxN) + "]");
  }
  if (opts.series_degree && (*opts.series_degree < 0 || *opts.series_degree > kSuiteMaxDegree)) {
    throw std::invalid_argument("series-degree must lie in [0, " + std::to_string(kSuiteMaxDegree) + "]");
  }

  std::vector<std::pair<const RegistryEntry*, json>> work;
  for (const auto& e : registry()) {
    if (selector != "all" && e.category != selector) continue;
    json params = json::object();
    if (opts.max_n && e.defaults.contains("max_n")) params["max_n"] = std::min(*opts.max_n, e.defaults["max_n"].get<int>());
    if (opts.series_degree && e.defaults.contains("degree") && e.category == "series") {
      params["degree"] = std::min(*opts.series_degree, e.defaults["degree"].get<int>());
    }
    if (e.defaults.contains("seed")) params["seed"] = opts.seed;
    work.emplace_back(&e, effective_params(e, params));
  }

  std::vector<IdentityReport> out(work.size());
  unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(work.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) out[i] = execute(*work[i].first, work[i].second, opts.perturb);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace descentlab
