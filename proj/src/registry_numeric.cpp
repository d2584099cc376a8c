#include <cmath>
#include <stdexcept>

#include "descentlab/families.hpp"
#include "descentlab/qcalc.hpp"
#include "registry_detail.hpp"

namespace descentlab {

namespace {

constexpr double kRelTol = 1e-9;

struct NumericForm {
  std::string id;
  std::string statement;
  bool needs_y;
  int min_n;
  int max_n;
  // (n, y, t) -> (lhs, rhs); throws domain_error off the branch domain
  std::function<std::pair<double, double>(int, double, double)> eval;
};

double at_t(const Poly& p, double t) { return p.evaluate(std::map<Var, double>{{Var::t, t}}); }

double at_yt(const Poly& p, double y, double t) {
  return p.evaluate(std::map<Var, double>{{Var::y, y}, {Var::t, t}});
}

double a_at(int n, double v) { return at_t(detail::eulerian(n), v); }

double binom(int n, int k) { return binomial(n, k).get_d(); }

void require(bool ok) {
  if (!ok) throw std::domain_error("point outside branch domain");
}

// v = (2/t)(1 - sqrt(1-t)) - 1
double v_peak(double t) {
  require(t > 0 && t < 1);
  return 2.0 / t * (1.0 - std::sqrt(1.0 - t)) - 1.0;
}

// v = (1 - sqrt(1-t^2))/t
double v_udr(double t) {
  require(t > 0 && t < 1);
  return (1.0 - std::sqrt(1.0 - t * t)) / t;
}

std::pair<double, double> uv(double y, double t) {
  require(t > 0 && t < 1 && y > 0 && y < 1);
  double radicand = (1 + t) * (1 + t) - 4 * y * t;
  require(radicand >= 0);
  double s = std::sqrt(radicand);
  double u = (1 + t * t - 2 * y * t - (1 - t) * s) / (2 * (1 - y) * t);
  double v = ((1 + t) * (1 + t) - 2 * y * t - (1 + t) * s) / (2 * y * t);
  return {u, v};
}

const std::vector<NumericForm>& forms() {
  static const std::vector<NumericForm> table = {
      {"NUM-PK", "P^pk_n(t) = (2/(1+v))^(n+1) A_n(v)", false, 1, 8,
       [](int n, double, double t) {
         double v = v_peak(t);
         return std::make_pair(at_t(generate_polynomial("pk", n), t), std::pow(2 / (1 + v), n + 1) * a_at(n, v));
       }},
      {"NUM-LPK", "P^lpk_n(t) = (1+v)^-n sum_k C(n,k) 2^k (1-v)^(n-k) A_k(v)", false, 0, 8,
       [](int n, double, double t) {
         double v = v_peak(t);
         double s = 0;
         for (int k = 0; k <= n; ++k) s += binom(n, k) * std::pow(2.0, k) * std::pow(1 - v, n - k) * a_at(k, v);
         return std::make_pair(at_t(generate_polynomial("lpk", n), t), s / std::pow(1 + v, n));
       }},
      {"NUM-BR", "P^br_n(t) = ((1+t)/2)^(n-1) (1+v)^(n+1) A_n((1-v)/(1+v)), v = sqrt((1-t)/(1+t))", false, 2, 8,
       [](int n, double, double t) {
         require(t > 0 && t < 1);
         double v = std::sqrt((1 - t) / (1 + t));
         double rhs = std::pow((1 + t) / 2, n - 1) * std::pow(1 + v, n + 1) * a_at(n, (1 - v) / (1 + v));
         return std::make_pair(at_t(generate_polynomial("br", n), t), rhs);
       }},
      {"NUM-PKDES", "P^(pk,des)_n(y,t) = ((1+u)/(1+uv))^(n+1) A_n(v)", true, 1, 8,
       [](int n, double y, double t) {
         auto [u, v] = uv(y, t);
         return std::make_pair(at_yt(generate_polynomial("pkdes", n), y, t),
                               std::pow((1 + u) / (1 + u * v), n + 1) * a_at(n, v));
       }},
      {"NUM-LPKDES", "P^(lpk,des)_n(y,t) = (1+uv)^-n sum_k C(n,k) (1+u)^k (1-v)^(n-k) A_k(v)", true, 0, 8,
       [](int n, double y, double t) {
         auto [u, v] = uv(y, t);
         double s = 0;
         for (int k = 0; k <= n; ++k) s += binom(n, k) * std::pow(1 + u, k) * std::pow(1 - v, n - k) * a_at(k, v);
         return std::make_pair(at_yt(generate_polynomial("lpkdes", n), y, t), s / std::pow(1 + u * v, n));
       }},
      {"NUM-LPKDES-B", "P^(lpk,des)_n(y,t) = B_n(u,v)/(1+uv)^n", true, 0, 6,
       [](int n, double y, double t) {
         auto [u, v] = uv(y, t);
         return std::make_pair(at_yt(generate_polynomial("lpkdes", n), y, t),
                               at_yt(detail::b_full(n), u, v) / std::pow(1 + u * v, n));
       }},
      {"NUM-UDR-A", "P^udr_n(t) = 2(1+v)^(n-1)/(1+v^2)^n A_n(v)", false, 1, 8,
       [](int n, double, double t) {
         double v = v_udr(t);
         return std::make_pair(at_t(generate_polynomial("udr", n), t),
                               2 * std::pow(1 + v, n - 1) / std::pow(1 + v * v, n) * a_at(n, v));
       }},
      {"NUM-UDR-F", "P^udr_n(t) = 2v/((1+v)(1+v^2)^n) F_n(v)", false, 1, 6,
       [](int n, double, double t) {
         double v = v_udr(t);
         return std::make_pair(at_t(generate_polynomial("udr", n), t),
                               2 * v / ((1 + v) * std::pow(1 + v * v, n)) * at_t(detail::at_y1(detail::f_full(n)), v));
       }},
  };
  return table;
}

const NumericForm& form(std::string_view id) {
  for (const auto& f : forms()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown inverse form '" + std::string(id) + "'");
}

void check_point(Checker& c, const NumericForm& f, const Rational& y, const Rational& t, int lo, int hi) {
  for (int n = lo; n <= hi && c.ok(); ++n) {
    auto [lhs, rhs] = f.eval(n, y.get_d(), t.get_d());
    json where{{"n", n}, {"t", t.get_str()}};
    if (f.needs_y) where["y"] = y.get_str();
    c.close(lhs, rhs, kRelTol, where);
  }
}

}  // namespace

std::vector<std::string> inverse_form_ids() {
  std::vector<std::string> out;
  for (const auto& f : forms()) out.push_back(f.id);
  return out;
}

IdentityReport numeric_spot_check(std::string_view id, const std::map<Var, Rational>& point, int min_n, int max_n) {
  const auto& f = form(id);
  auto get = [&](Var v) -> Rational {
    auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument(std::string("missing coordinate ") + var_name(v));
    return it->second;
  };
  Rational t = get(Var::t);
  Rational y = f.needs_y ? get(Var::y) : Rational(0);
  // Probe the domain once up front so the error is not turned into a failed report.
  f.eval(std::max(f.min_n, 1), y.get_d(), t.get_d());
  int lo = min_n < 0 ? f.min_n : min_n;
  int hi = max_n < 0 ? f.max_n : max_n;
  if (lo < f.min_n || hi > f.max_n) throw std::invalid_argument("n outside the verified range of " + f.id);

  IdentityReport r;
  r.id = f.id;
  r.params = json{{"min_n", lo}, {"max_n", hi}, {"t", t.get_str()}};
  if (f.needs_y) r.params["y"] = y.get_str();
  Checker c;
  check_point(c, f, y, t, lo, hi);
  r.pass = c.ok();
  r.witness = c.witness();
  return r;
}

namespace detail {

void add_numeric_entries(std::vector<RegistryEntry>& out) {
  for (const auto& f : forms()) {
    const NumericForm* fp = &f;
    out.push_back({f.id, "numeric", f.statement + " at seeded points k/1000",
                   json{{"min_n", f.min_n}, {"max_n", f.max_n}, {"points", 25}, {"seed", kDefaultSeed}},
                   [fp](Checker& c, const json& p) {
                     auto [lo, hi] = n_range(p);
                     Rng rng(seed_of(p));
                     const int points = p.at("points").get<int>();
                     for (int i = 0; i < points && c.ok(); ++i) {
                       Rational t(static_cast<long>(rng.below(999) + 1), 1000);
                       Rational y(static_cast<long>(rng.below(999) + 1), 1000);
                       t.canonicalize();
                       y.canonicalize();
                       check_point(c, *fp, y, t, lo, hi);
                     }
                   }});
  }
}

}  // namespace detail

}  // namespace descentlab
