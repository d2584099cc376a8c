// One line per acceptance criterion; exit status 0 only if all of them hold.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "descentlab/actions.hpp"
#include "descentlab/identities.hpp"
#include "descentlab/permutation.hpp"
#include "descentlab/signed.hpp"
#include "descentlab/trees_paths.hpp"

using namespace descentlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Proc {
  int status = -1;
  std::string out;
};

Proc run(const std::string& cmd) {
  Proc p;
  FILE* f = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!f) return p;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, f)) > 0) p.out.append(buf, k);
  int st = pclose(f);
  p.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Outcome check_ids(const std::vector<std::string>& ids) {
  Outcome o;
  for (const auto& id : ids) {
    auto r = verify_identity(id);
    if (!r.pass) {
      o.pass = false;
      o.detail = id + " " + r.witness.dump();
      return o;
    }
  }
  o.detail = std::to_string(ids.size()) + " entries";
  return o;
}

Outcome check_suite(const std::string& suite) {
  Outcome o;
  auto reports = run_suite(suite);
  for (const auto& r : reports) {
    if (!r.pass) {
      o.pass = false;
      o.detail = r.id + " " + r.witness.dump();
      return o;
    }
  }
  o.detail = std::to_string(reports.size()) + " entries";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  auto st = compute_stats(Permutation::parse("8 5 7 1 2 6 4 3"));
  expect(st.des == 4 && st.udr == 6 && st.maj == 17 && st.imaj == 20, "85712643");
  expect(inv(Permutation::parse("1 4 3 2")) == 3, "inv(1432)");
  auto ss = signed_stats(SignedPermutation::parse("-4,7,2,-6,-3,5,1"));
  expect(ss.des_b == 4 && ss.fdes == 7 && ss.neg == 3, "signed");
  auto p = Permutation::parse("4 6 7 1 2 5 8 3 9");
  expect(phi_prime(p, 5) == Permutation::parse("4 6 7 5 1 2 8 3 9"), "phi'_5");
  expect(phi_prime(p, 8) == p, "phi'_8");
  auto ts = tree_stats(theta_tilde(Permutation::parse("1 3 2 4 9 5 8 7 6")));
  expect(ts.nlc == 5 && ts.tc == 3, "theta-tilde");
  auto d = psi(Permutation::parse("2 1 9 4 3 8 5 6 7"));
  auto ds = dyck_stats(d);
  expect(d.word() == "UDUUDDUUUUDUDDUDDD" && ds.pk == 5 && ds.hk == 2, "psi");
  auto es = dyck_stats(DyckPath("UUDUUUDDDDUD"));
  expect(es.pk == 3 && es.hk == 1, "dyck");
  expect(reverse_complement(Permutation::parse("1 7 2 3 4 6 5")) == Permutation::parse("3 2 4 5 6 1 7"), "rc");
  o.pass = bad.empty();
  o.detail = o.pass ? "8 examples" : "mismatch:";
  for (const auto& b : bad) o.detail += " " + b;
  return o;
}

Outcome mutation_sanity() {
  Outcome o;
  auto p = run(quote(DESCENTLAB_MUTANT_CLI) + " --output-format json verify --suite all");
  if (p.status != 1) {
    o.pass = false;
    o.detail = "mutant exit status " + std::to_string(p.status);
    return o;
  }
  auto j = json::parse(p.out);
  int failing = 0;
  std::string first;
  for (const auto& r : j["reports"]) {
    if (r["status"] == "fail" && r["witness"].is_object() && !r["witness"].empty()) {
      if (failing++ == 0) first = r["id"].get<std::string>();
    }
  }
  o.pass = failing >= 1;
  o.detail = std::to_string(failing) + " failing entries with witness, first " + first;
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const std::string cli = quote(DESCENTLAB_CLI);
  auto plain = run(cli + " verify --suite all");
  if (plain.status != 0) {
    o.pass = false;
    o.detail = "verify --suite all exit " + std::to_string(plain.status);
    return o;
  }
  struct Case {
    std::string args, schema;
  };
  const std::vector<Case> cases = {
      {"verify --suite all", "verify"},
      {"verify --suite actions --seed 7", "verify"},
      {"stats --perm '8 5 7 1 2 6 4 3'", "stats"},
      {"signed-stats --perm=-4,7,2,-6,-3,5,1", "signed_stats"},
      {"poly --family pkdes --n 5", "poly"},
      {"orbit --action mfs --perm '4 6 7 1 2 5 8 3 9'", "orbit"},
      {"bijection --map psi --perm '2 1 9 4 3 8 5 6 7'", "bijection"},
      {"enumerate --class av231 --n 4 --stats des,pk,comp", "enumerate"},
  };
  int checked = 0;
  for (const auto& c : cases) {
    auto a = run(cli + " --output-format json " + c.args);
    auto b = run(cli + " --output-format json " + c.args);
    if (a.status != 0 || a.out != b.out) {
      o.pass = false;
      o.detail = "not deterministic: " + c.args;
      return o;
    }
    std::string path = std::string(DESCENTLAB_BUILD_DIR) + "/acceptance_" + c.schema + ".json";
    if (FILE* f = fopen(path.c_str(), "w")) {
      fwrite(a.out.data(), 1, a.out.size(), f);
      fclose(f);
    }
    auto v = run(quote(DESCENTLAB_PYTHON) + " " + quote(DESCENTLAB_VALIDATOR) + " " +
                 quote(std::string(DESCENTLAB_SCHEMA_DIR) + "/" + c.schema + ".schema.json") + " " + quote(path));
    if (v.status != 0) {
      o.pass = false;
      o.detail = "schema rejected output of: " + c.args;
      return o;
    }
    ++checked;
  }
  o.detail = "exit 0, " + std::to_string(checked) + " invocations byte-identical and schema-valid";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked examples", 1, worked_examples},
      {2, "polynomial identities", 60,
       [] {
         return check_ids({"EUL-PK", "EUL-LPK", "EUL-BR", "BNA", "BNA-1", "FNA", "FNAN-S", "FNB", "FNB-1",
                           "ANB", "PKDES", "LPKDES", "LPKDES-B", "UDR-A", "LPVD", "LPVD-F", "F-UDR",
                           "PKDES-231", "PKDES-2SS", "PKDES-ST", "CLOSED-231", "TCNLC", "HKPK", "NARAYANA",
                           "JS-2SS"});
       }},
      {3, "series identities", 120,
       [] {
         return check_ids({"EGF-A", "EGF-B", "EGF-F", "EGF-BY", "EGF-FY", "EGF-AQ", "Q-PKDES", "Q-PK",
                           "Q-LPKDES", "Q-LPK", "Q-UDR", "Q-LPVD", "EGF-ALT", "BARS-B", "BARS-F"});
       }},
      {4, "ncsf suite", 60, [] { return check_suite("ncsf"); }},
      {5, "action suites", 90, [] { return check_suite("actions"); }},
      {6, "oracle cross-checks", 0, [] { return check_ids({"LEM-DESPRE", "Q-MULT", "EULER-NUM", "STACK-SORT"}); }},
      {7, "numeric spot checks", 0, [] { return check_suite("numeric"); }},
      {8, "mutation sanity", 0, mutation_sanity},
      {9, "cli contract", 0, cli_contract},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = c.budget_s <= 0 || secs < c.budget_s;
    bool ok = o.pass && in_budget;
    all = all && ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << "  " << c.number << ". " << c.name << "  " << secs << " s";
    if (c.budget_s > 0) line << " (budget " << static_cast<int>(c.budget_s) << " s)";
    line << "  " << o.detail;
    if (!in_budget) line << "  over budget";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
