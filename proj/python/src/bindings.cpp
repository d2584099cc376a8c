#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "descentlab/actions.hpp"
#include "descentlab/families.hpp"
#include "descentlab/identities.hpp"
#include "descentlab/permutation.hpp"
#include "descentlab/signed.hpp"
#include "descentlab/trees_paths.hpp"

namespace py = pybind11;
namespace dl = descentlab;
using nlohmann::json;

namespace {

std::string stats_json(const std::string& text) {
  auto p = dl::Permutation::parse(text);
  auto s = dl::compute_stats(p);
  json j{{"perm", p.to_string()}, {"des", s.des}, {"pk", s.pk}, {"lpk", s.lpk}, {"val", s.val},
         {"udr", s.udr}, {"dasc", s.dasc}, {"ddes", s.ddes}, {"br", s.br}, {"inv", s.inv},
         {"maj", s.maj}, {"imaj", s.imaj}, {"altdes", s.altdes}, {"des_set", s.des_set},
         {"comp", s.comp.to_string()}, {"alt_comp", s.alt_comp.to_string()}};
  return j.dump();
}

std::string signed_stats_json(const std::string& text) {
  auto s = dl::SignedPermutation::parse(text);
  auto st = dl::signed_stats(s);
  return json{{"perm", s.to_string()}, {"des_b", st.des_b}, {"fdes", st.fdes}, {"neg", st.neg}}.dump();
}

std::string polynomial(const std::string& family, int n, const std::string& cls) {
  return dl::generate_polynomial(family, n, dl::ClassSelector::from_name(cls)).to_string();
}

std::string verify_json(const std::string& id, const std::string& params, bool perturb) {
  return dl::verify_identity(id, json::parse(params), perturb ? dl::Perturb::rhs : dl::Perturb::none).to_json().dump();
}

std::string suite_json(const std::string& name, std::optional<int> max_n, std::optional<int> degree,
                       std::uint64_t seed, unsigned jobs) {
  dl::SuiteOptions opts;
  opts.max_n = max_n;
  opts.series_degree = degree;
  opts.seed = seed;
  opts.jobs = jobs;
  json out = json::array();
  for (const auto& r : dl::run_suite(name, opts)) out.push_back(r.to_json());
  return out.dump();
}

std::vector<std::string> mfs_orbit(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& p : dl::mfs_orbit(dl::Permutation::parse(text))) out.push_back(p.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_descentlab, m) {
  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
  m.def("stats_json", &stats_json, py::arg("perm"));
  m.def("signed_stats_json", &signed_stats_json, py::arg("perm"));
  m.def("polynomial", &polynomial, py::arg("family"), py::arg("n"), py::arg("cls") = "all");
  m.def("verify_json", &verify_json, py::arg("id"), py::arg("params") = "{}", py::arg("perturb") = false,
        py::call_guard<py::gil_scoped_release>());
  m.def("suite_json", &suite_json, py::arg("name"), py::arg("max_n") = std::nullopt, py::arg("degree") = std::nullopt,
        py::arg("seed") = dl::kDefaultSeed, py::arg("jobs") = 1u, py::call_guard<py::gil_scoped_release>());
  m.def("mfs_orbit", &mfs_orbit, py::arg("perm"));
  m.def("psi", [](const std::string& text) { return dl::psi(dl::Permutation::parse(text)).word(); }, py::arg("perm"));
  m.def("theta_tilde", [](const std::string& text) { return dl::theta_tilde(dl::Permutation::parse(text)).to_string(); },
        py::arg("perm"));
  m.def("family_names", &dl::family_names);
  m.def("suite_names", &dl::suite_names);
  m.def("registry_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : dl::registry()) ids.push_back(e.id);
    return ids;
  });
}
