#include "descentlab/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "descentlab/actions.hpp"
#include "descentlab/qcalc.hpp"
#include "descentlab/signed.hpp"
#include "descentlab/trees_paths.hpp"

namespace descentlab {

namespace {

enum class Family {
  eulerian, pk, pkdes, lpk, lpkdes, br, udr, lpkvaldes, alt_eulerian,
  q_eulerian, q_pk, q_pkdes, q_lpk, q_lpkdes, q_udr, q_lpkvaldes,
  narayana, js_2ss, closed_231, b_poly, f_poly, tree_tcnlc, dyck_hkpk,
};

const std::vector<std::pair<std::string, Family>>& family_table() {
  static const std::vector<std::pair<std::string, Family>> table = {
      {"eulerian", Family::eulerian},       {"pk", Family::pk},
      {"pkdes", Family::pkdes},             {"lpk", Family::lpk},
      {"lpkdes", Family::lpkdes},           {"br", Family::br},
      {"udr", Family::udr},                 {"lpkvaldes", Family::lpkvaldes},
      {"alt_eulerian", Family::alt_eulerian}, {"q_eulerian", Family::q_eulerian},
      {"q_pk", Family::q_pk},               {"q_pkdes", Family::q_pkdes},
      {"q_lpk", Family::q_lpk},             {"q_lpkdes", Family::q_lpkdes},
      {"q_udr", Family::q_udr},             {"q_lpkvaldes", Family::q_lpkvaldes},
      {"narayana", Family::narayana},       {"js_2ss", Family::js_2ss},
      {"closed_231", Family::closed_231},   {"b_poly", Family::b_poly},
      {"f_poly", Family::f_poly},           {"tree_tcnlc", Family::tree_tcnlc},
      {"dyck_hkpk", Family::dyck_hkpk},
  };
  return table;
}

Family family_from_name(std::string_view name) {
  for (const auto& [s, f] : family_table()) {
    if (s == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

bool is_permutation_family(Family f) {
  switch (f) {
    case Family::narayana:
    case Family::js_2ss:
    case Family::closed_231:
    case Family::b_poly:
    case Family::f_poly:
    case Family::tree_tcnlc:
    case Family::dyck_hkpk:
      return false;
    default:
      return true;
  }
}

unsigned u(int k) {
  if (k < 0) throw std::logic_error("negative exponent in family monomial");
  return static_cast<unsigned>(k);
}

Monomial family_monomial(Family f, const Permutation& p) {
  // Empty permutation: every t^{stat+1} family is 1 by convention.
  if (p.size() == 0) return {};
  Monomial m;
  bool with_q = false;
  switch (f) {
    case Family::q_eulerian: with_q = true; [[fallthrough]];
    case Family::eulerian: m = Monomial::of(Var::t, u(des(p) + 1)); break;
    case Family::q_pk: with_q = true; [[fallthrough]];
    case Family::pk: m = Monomial::of(Var::t, u(pk(p) + 1)); break;
    case Family::q_pkdes: with_q = true; [[fallthrough]];
    case Family::pkdes: m = Monomial::of(Var::y, u(pk(p) + 1)) * Monomial::of(Var::t, u(des(p) + 1)); break;
    case Family::q_lpk: with_q = true; [[fallthrough]];
    case Family::lpk: m = Monomial::of(Var::t, u(lpk(p))); break;
    case Family::q_lpkdes: with_q = true; [[fallthrough]];
    case Family::lpkdes: m = Monomial::of(Var::y, u(lpk(p))) * Monomial::of(Var::t, u(des(p))); break;
    case Family::br: m = Monomial::of(Var::t, u(br(p))); break;
    case Family::q_udr: with_q = true; [[fallthrough]];
    case Family::udr: m = Monomial::of(Var::t, u(udr(p))); break;
    case Family::q_lpkvaldes: with_q = true; [[fallthrough]];
    case Family::lpkvaldes:
      m = Monomial::of(Var::y, u(lpk(p))) * Monomial::of(Var::z, u(val(p))) * Monomial::of(Var::t, u(des(p)));
      break;
    case Family::alt_eulerian: m = Monomial::of(Var::t, u(altdes(p) + 1)); break;
    default: throw std::logic_error("not a permutation family");
  }
  if (with_q) m = m * Monomial::of(Var::q, u(inv(p)));
  return m;
}

Poly tally(const std::map<Monomial, long>& counts) {
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : counts) terms.emplace_back(m, Integer(c));
  return Poly::from_terms(std::move(terms));
}

Poly sum_over(Family f, const std::vector<Permutation>& perms) {
  std::map<Monomial, long> counts;
  for (const auto& p : perms) ++counts[family_monomial(f, p)];
  return tally(counts);
}

Poly sum_over_sn(Family f, int n) {
  if (n > kMaxEnumerateSn) throw std::length_error("enumeration too large");
  std::map<Monomial, long> counts;
  for (const auto& p : enumerate_sn(n)) ++counts[family_monomial(f, p)];
  return tally(counts);
}

Poly tree_tcnlc_poly(int n) {
  std::map<Monomial, long> counts;
  for (const auto& t : enumerate_trees(n)) {
    auto s = tree_stats(t);
    ++counts[Monomial::of(Var::y, u(s.tc + 1)) * Monomial::of(Var::t, u(s.nlc))];
  }
  return tally(counts);
}

Poly dyck_hkpk_poly(int n) {
  std::map<Monomial, long> counts;
  for (const auto& d : enumerate_dyck(n)) {
    auto s = dyck_stats(d);
    ++counts[Monomial::of(Var::y, u(s.hk + 1)) * Monomial::of(Var::t, u(s.pk))];
  }
  return tally(counts);
}

}  // namespace

ClassSelector ClassSelector::from_name(std::string_view name) {
  if (name == "all") return all();
  if (name == "av231") return av231();
  if (name == "stack2") return stack2();
  throw std::invalid_argument("unknown class selector '" + std::string(name) + "'");
}

std::string ClassSelector::describe() const {
  switch (kind) {
    case ClassKind::all: return "all";
    case ClassKind::av231: return "av231";
    case ClassKind::stack2: return "stack2";
    case ClassKind::explicit_set: return "set of " + std::to_string(members.size());
    case ClassKind::orbit: return "orbit of " + seed.to_string();
  }
  return "?";
}

std::vector<Permutation> class_members(int n, const ClassSelector& sel) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Permutation> out;
  switch (sel.kind) {
    case ClassKind::all:
      out = all_permutations(n);
      break;
    case ClassKind::av231:
      out = av231_via_trees(n);
      break;
    case ClassKind::stack2:
      if (n > kMaxEnumerateSn) throw std::length_error("enumeration too large");
      for (const auto& p : enumerate_sn(n)) {
        if (is_r_stack_sortable(p, 2)) out.push_back(p);
      }
      break;
    case ClassKind::explicit_set: {
      std::set<Permutation> s(sel.members.begin(), sel.members.end());
      for (const auto& p : s) {
        if (p.size() != n) throw std::invalid_argument("class member has the wrong size");
      }
      out.assign(s.begin(), s.end());
      break;
    }
    case ClassKind::orbit:
      if (sel.seed.size() != n) throw std::invalid_argument("orbit seed has the wrong size");
      out = mfs_orbit(sel.seed);
      break;
  }
  return out;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [s, f] : family_table()) out.push_back(s);
  return out;
}

Poly generate_polynomial(std::string_view family, int n, const ClassSelector& sel) {
  Family f = family_from_name(family);
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (!is_permutation_family(f)) {
    if (sel.kind != ClassKind::all) throw std::invalid_argument("family '" + std::string(family) + "' takes no class selector");
    switch (f) {
      case Family::narayana: return narayana(n);
      case Family::js_2ss: return js_2ss(n);
      case Family::closed_231: return closed_231(n);
      case Family::b_poly: return b_poly(n);
      case Family::f_poly: return f_poly(n);
      case Family::tree_tcnlc: return tree_tcnlc_poly(n);
      case Family::dyck_hkpk: return dyck_hkpk_poly(n);
      default: break;
    }
  }
  if (sel.kind != ClassKind::all) return sum_over(f, class_members(n, sel));

  static std::mutex mu;
  static std::map<std::pair<Family, int>, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({f, n});
    if (it != cache.end()) return it->second;
  }
  Poly p = sum_over_sn(f, n);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(f, n), p);
  return p;
}

int statistic_value(const Permutation& p, std::string_view st) {
  if (st == "des") return des(p);
  if (st == "pk") return pk(p);
  if (st == "lpk") return lpk(p);
  if (st == "val") return val(p);
  if (st == "udr") return udr(p);
  if (st == "br") return br(p);
  if (st == "inv") return inv(p);
  if (st == "maj") return maj(p);
  if (st == "imaj") return imaj(p);
  if (st == "altdes") return altdes(p);
  if (st == "dasc") return dasc(p);
  if (st == "ddes") return ddes(p);
  if (st == "23-1" || st == "13-2") return count_vincular(p, st);
  throw std::invalid_argument("unknown statistic '" + std::string(st) + "'");
}

Poly generate_polynomial_refined(std::string_view family, const std::vector<Permutation>& perms,
                                 std::string_view st) {
  Family f = family_from_name(family);
  if (!is_permutation_family(f)) throw std::invalid_argument("family '" + std::string(family) + "' cannot be refined");
  std::map<Monomial, long> counts;
  for (const auto& p : perms) ++counts[family_monomial(f, p) * Monomial::of(Var::w, u(statistic_value(p, st)))];
  return tally(counts);
}

Poly narayana(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return Poly(1);
  std::vector<Poly::Term> terms;
  for (int k = 1; k <= n; ++k) {
    Integer c = binomial(n, k) * binomial(n, k - 1) / n;
    terms.emplace_back(Monomial::of(Var::t, u(k)), c);
  }
  return Poly::from_terms(std::move(terms));
}

Poly js_2ss(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return Poly(1);
  std::vector<Poly::Term> terms;
  for (int k = 1; k <= n; ++k) {
    Integer num = factorial(u(n + k - 1)) * factorial(u(2 * n - k));
    Integer den = factorial(u(k)) * factorial(u(n - k + 1)) * factorial(u(2 * k - 1)) * factorial(u(2 * n - 2 * k + 1));
    if (num % den != 0) throw std::logic_error("non-integer two-stack-sortable coefficient");
    terms.emplace_back(Monomial::of(Var::t, u(k)), num / den);
  }
  return Poly::from_terms(std::move(terms));
}

Poly closed_231(int n) {
  if (n < 1) throw std::invalid_argument("closed form needs n >= 1");
  Poly s;
  Poly one_plus_t = Poly(1) + Poly::var(Var::t);
  for (int k = 0; 2 * k <= n - 1; ++k) {
    Integer c = binomial(2 * k, k) * binomial(n - 1, 2 * k) / (k + 1);
    s += Poly::monomial(c, Monomial::of(Var::y, u(k + 1)) * Monomial::of(Var::t, u(k + 1))) * one_plus_t.pow(n - 2 * k - 1);
  }
  return s;
}

}  // namespace descentlab
