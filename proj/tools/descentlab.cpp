// descentlab command-line front end.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "descentlab/actions.hpp"
#include "descentlab/families.hpp"
#include "descentlab/identities.hpp"
#include "descentlab/permutation.hpp"
#include "descentlab/signed.hpp"
#include "descentlab/trees_paths.hpp"

namespace dl = descentlab;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "467125839" is read letter by letter; anything with separators goes to the parser.
dl::Permutation read_perm(const std::string& text) {
  bool compact = text.size() > 1 && std::all_of(text.begin(), text.end(), [](char c) { return c >= '1' && c <= '9'; });
  if (!compact) return dl::Permutation::parse(text);
  std::vector<int> v;
  for (char c : text) v.push_back(c - '0');
  return dl::Permutation(std::move(v));
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Ordered key/value rows rendered in any of the three formats.
using Row = std::vector<std::pair<std::string, json>>;

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar_text(v[i]);
    return s;
  }
  return v.dump();
}

void emit_rows(const std::vector<Row>& rows, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o = json::object();
      for (const auto& [k, v] : r) o[k] = v;
      arr.push_back(o);
    }
    os << (rows.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else if (format == "csv") {
    if (rows.empty()) return;
    for (std::size_t i = 0; i < rows[0].size(); ++i) os << (i ? "," : "") << csv_field(rows[0][i].first);
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(scalar_text(r[i].second));
      os << "\n";
    }
  } else {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j) os << "\n";
      for (const auto& [k, v] : rows[j]) os << k << ": " << scalar_text(v) << "\n";
    }
  }
}

json stat_json(const dl::Permutation& p, const std::string& name) {
  auto st = dl::compute_stats(p);
  if (name == "des") return st.des;
  if (name == "pk") return st.pk;
  if (name == "lpk") return st.lpk;
  if (name == "val") return st.val;
  if (name == "udr") return st.udr;
  if (name == "dasc") return st.dasc;
  if (name == "ddes") return st.ddes;
  if (name == "br") return st.br;
  if (name == "inv") return st.inv;
  if (name == "maj") return st.maj;
  if (name == "imaj") return st.imaj;
  if (name == "altdes") return st.altdes;
  if (name == "des_set") return st.des_set;
  if (name == "comp") return st.comp.to_string();
  if (name == "alt_comp") return st.alt_comp.to_string();
  if (name == "23-1" || name == "13-2") return dl::count_vincular(p, name);
  throw UsageError("unknown statistic '" + name + "'");
}

const std::vector<std::string> kStatNames = {"des", "pk", "lpk", "val", "udr", "dasc", "ddes", "br",
                                             "inv", "maj", "imaj", "altdes", "des_set", "comp", "alt_comp"};

Row stats_row(const dl::Permutation& p) {
  Row r{{"perm", p.to_string()}};
  for (const auto& s : kStatNames) r.emplace_back(s, stat_json(p, s));
  return r;
}

dl::Perturb perturb_from(const std::string& s) {
  if (s == "none") return dl::Perturb::none;
  if (s == "lhs") return dl::Perturb::lhs;
  if (s == "rhs") return dl::Perturb::rhs;
  throw UsageError("unknown perturbation '" + s + "'");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DESCENTLAB_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
      return v;
    } catch (const std::exception&) {
      throw UsageError("DESCENTLAB_SEED is not an unsigned integer");
    }
  }
  return dl::kDefaultSeed;
}

int run_verify(const std::string& suite, const std::optional<int>& max_n, const std::optional<int>& degree,
               std::uint64_t seed, const std::string& perturb, unsigned jobs, const std::string& format) {
  if (max_n && (*max_n < 0 || *max_n > dl::kSuiteMaxN)) {
    throw UsageError("--max-n must lie in [0, " + std::to_string(dl::kSuiteMaxN) + "]");
  }
  if (degree && (*degree < 0 || *degree > dl::kSuiteMaxDegree)) {
    throw UsageError("--series-degree must lie in [0, " + std::to_string(dl::kSuiteMaxDegree) + "]");
  }
  dl::SuiteOptions opts;
  opts.max_n = max_n;
  opts.series_degree = degree;
  opts.seed = seed;
  opts.perturb = perturb_from(perturb);
  opts.jobs = std::max(1u, jobs);

  std::vector<dl::IdentityReport> reports;
  try {
    reports = dl::run_suite(suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  const bool ok = passed == reports.size();

  if (format == "json") {
    json out{{"suite", suite}, {"seed", seed}, {"total", reports.size()}, {"passed", passed}, {"status", ok ? "pass" : "fail"}};
    out["reports"] = json::array();
    for (const auto& r : reports) out["reports"].push_back(r.to_json());
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "id,status,params,witness\n";
    for (const auto& r : reports) {
      std::cout << csv_field(r.id) << "," << (r.pass ? "pass" : "fail") << "," << csv_field(r.params.dump()) << ","
                << csv_field(r.witness.is_null() ? "" : r.witness.dump()) << "\n";
    }
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
      if (!r.pass) std::cout << "  " << r.witness.dump();
      std::cout << "\n";
    }
    std::cout << passed << "/" << reports.size() << " passed\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"descentlab: descent statistics, polynomial families and identity verification"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "plain";
  std::optional<std::uint64_t> seed_flag;
  auto* fmt = app.add_option("--output-format,--format", format, "plain, json or csv")
                  ->check(CLI::IsMember({"plain", "json", "csv"}));
  (void)fmt;
  app.add_option("--seed", seed_flag, "seed for randomized suites (default: DESCENTLAB_SEED, then 24301)");

  std::string perm_text, family, class_name = "all", suite, action, map, stats_list = "des,pk,lpk,val,udr,inv,maj";
  int n = -1;
  std::optional<int> max_n, degree;
  std::string perturb = "none";
  unsigned jobs = 1;

  auto* stats = app.add_subcommand("stats", "statistics of a permutation");
  stats->add_option("--perm", perm_text, "permutation, e.g. \"8 5 7 1 2 6 4 3\"")->required();

  auto* sstats = app.add_subcommand("signed-stats", "statistics of a signed permutation");
  sstats->add_option("--perm", perm_text, "signed permutation, e.g. \"-4,7,2,-6,-3,5,1\"")->required();

  auto* poly = app.add_subcommand("poly", "a polynomial family at size n");
  poly->add_option("--family", family, "family name")->required();
  poly->add_option("--n", n, "size")->required()->check(CLI::Range(0, dl::kMaxEnumerateSn));
  poly->add_option("--class", class_name, "all, av231 or stack2");

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("--suite", suite, "all, polynomial, series, ncsf, actions, bijections or numeric")->required();
  verify->add_option("--max-n", max_n, "lower every size bound to K");
  verify->add_option("--series-degree", degree, "lower every series degree to D");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--perturb", perturb, "tamper with one coefficient: none, lhs or rhs");

  auto* orbit = app.add_subcommand("orbit", "orbit of a permutation");
  orbit->add_option("--action", action, "mfs or sign")->required()->check(CLI::IsMember({"mfs", "sign"}));
  orbit->add_option("--perm", perm_text, "permutation")->required();

  auto* bij = app.add_subcommand("bijection", "apply a tree or Dyck path bijection");
  bij->add_option("--map", map, "theta, theta-tilde or psi")->required()->check(CLI::IsMember({"theta", "theta-tilde", "psi"}));
  bij->add_option("--perm", perm_text, "permutation")->required();

  auto* en = app.add_subcommand("enumerate", "statistics over a class");
  en->add_option("--class", class_name, "all, av231 or stack2")->required();
  en->add_option("--n", n, "size")->required()->check(CLI::Range(0, 9));
  en->add_option("--stats", stats_list, "comma-separated statistics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::cerr << "descentlab: " << msg.substr(0, msg.find('\n')) << "\n";
    return 2;
  }

  try {
    std::ostream& os = std::cout;
    if (*stats) {
      emit_rows({stats_row(read_perm(perm_text))}, format, os);
    } else if (*sstats) {
      auto s = dl::SignedPermutation::parse(perm_text);
      auto st = dl::signed_stats(s);
      emit_rows({Row{{"perm", s.to_string()},
                     {"des_b", st.des_b},
                     {"fdes", st.fdes},
                     {"neg", st.neg},
                     {"des_b_set", dl::descent_set_b(s)}}},
                format, os);
    } else if (*poly) {
      auto p = dl::generate_polynomial(family, n, dl::ClassSelector::from_name(class_name));
      if (format == "json") {
        json out{{"family", family}, {"n", n}, {"class", class_name}, {"polynomial", p.to_string()}, {"terms", p.to_json()}};
        os << out.dump(2) << "\n";
      } else if (format == "csv") {
        os << "coefficient,monomial\n";
        for (const auto& [m, c] : p.terms()) os << c.get_str() << "," << csv_field(m.to_string()) << "\n";
      } else {
        os << p.to_string() << "\n";
      }
    } else if (*verify) {
      return run_verify(suite, max_n, degree, resolve_seed(seed_flag), perturb, jobs, format);
    } else if (*orbit) {
      auto p = read_perm(perm_text);
      std::vector<std::string> members;
      if (action == "mfs") {
        if (p.size() > dl::kMaxOrbitN) throw UsageError("orbit size guard: n must be at most " + std::to_string(dl::kMaxOrbitN));
        for (const auto& q : dl::mfs_orbit(p)) members.push_back(q.to_string());
      } else {
        if (p.size() > dl::kMaxEnumerateBn) throw UsageError("sign orbit guard: n must be at most " + std::to_string(dl::kMaxEnumerateBn));
        for (const auto& s : dl::sign_orbit(p)) members.push_back(s.to_string());
      }
      if (format == "json") {
        os << json{{"action", action}, {"perm", p.to_string()}, {"size", members.size()}, {"members", members}}.dump(2) << "\n";
      } else if (format == "csv") {
        os << "member\n";
        for (const auto& m : members) os << csv_field(m) << "\n";
      } else {
        for (const auto& m : members) os << m << "\n";
      }
    } else if (*bij) {
      auto p = read_perm(perm_text);
      Row r{{"map", map}, {"perm", p.to_string()}};
      if (map == "psi") {
        auto d = dl::psi(p);
        auto s = dl::dyck_stats(d);
        r.emplace_back("image", d.word());
        r.emplace_back("pk", s.pk);
        r.emplace_back("hk", s.hk);
      } else {
        auto tr = map == "theta" ? dl::theta(p) : dl::theta_tilde(p);
        auto s = dl::tree_stats(tr);
        r.emplace_back("image", tr.to_string());
        r.emplace_back("nlc", s.nlc);
        r.emplace_back("tc", s.tc);
      }
      emit_rows({r}, format, os);
    } else if (*en) {
      std::vector<std::string> names;
      std::stringstream ss(stats_list);
      for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) names.push_back(item);
      }
      std::vector<Row> rows;
      for (const auto& p : dl::class_members(n, dl::ClassSelector::from_name(class_name))) {
        Row r{{"perm", p.to_string()}};
        for (const auto& s : names) r.emplace_back(s, stat_json(p, s));
        rows.push_back(std::move(r));
      }
      if (format == "json" && rows.size() == 1) {
        json arr = json::array();
        json o = json::object();
        for (const auto& [k, v] : rows[0]) o[k] = v;
        arr.push_back(o);
        os << arr.dump(2) << "\n";
      } else {
        emit_rows(rows, format, os);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "descentlab: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "descentlab: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "descentlab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "descentlab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
