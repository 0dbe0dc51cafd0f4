#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "bdkp/hirota.hpp"
#include "bdkp/problem.hpp"
#include "bdkp/render.hpp"
#include "bdkp/tau_bkp.hpp"

namespace py = pybind11;

namespace {

bdkp::RenderFormat parse_format(const std::string& format) {
  if (format == "plain") return bdkp::RenderFormat::plain;
  if (format == "latex") return bdkp::RenderFormat::latex;
  if (format == "json") return bdkp::RenderFormat::json;
  throw bdkp::SpecError("format", "expected plain, latex or json");
}

std::string render_tau(const std::string& spec_json, const std::string& format,
                       std::uint64_t seed) {
  auto spec = bdkp::ProblemSpec::from_json(nlohmann::json::parse(spec_json));
  return bdkp::render_taus(bdkp::build_taus(spec, seed), parse_format(format));
}

std::vector<std::tuple<std::string, bool, std::string>> verify(
    const std::string& spec_json, const std::vector<std::string>& checks, std::uint64_t seed) {
  auto spec = bdkp::ProblemSpec::from_json(nlohmann::json::parse(spec_json));
  auto built = bdkp::build_taus(spec, seed);
  std::set<std::string> requested(checks.begin(), checks.end());
  if (requested.empty()) requested = bdkp::applicable_checks(spec);
  std::vector<std::tuple<std::string, bool, std::string>> out;
  for (const auto& r : bdkp::run_checks(built, requested))
    out.emplace_back(r.name, r.pass, r.detail);
  return out;
}

std::string qschur(const std::vector<int>& partition, const std::string& format) {
  bdkp::TauPoly tau = bdkp::q_schur(bdkp::PartitionExt(partition));
  if (format == "latex") return bdkp::to_latex(tau.poly);
  if (format == "json") return bdkp::poly_to_json(tau.poly).dump();
  return bdkp::to_plain(tau.poly);
}

bool is_bkp_tau(const std::string& expr) {
  return bdkp::bkp_residual(bdkp::parse_poly(expr)).is_zero();
}

bool is_mdkp_pair(const std::string& tau0, const std::string& tau1) {
  return bdkp::mdkp_residual(bdkp::parse_poly(tau0), bdkp::parse_poly(tau1)).is_zero();
}

}  // namespace

PYBIND11_MODULE(_bdkp, m) {
  m.doc() = "Exact polynomial tau-functions of the BKP, DKP and MDKP hierarchies";

  py::register_exception<bdkp::SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<bdkp::ChecksUnavailableError>(m, "ChecksUnavailableError",
                                                       PyExc_ValueError);

  m.def("render_tau", &render_tau, py::arg("spec_json"), py::arg("format") = "plain",
        py::arg("seed") = 0,
        "Construct the tau-function(s) of a JSON problem spec and render them.");
  m.def("verify", &verify, py::arg("spec_json"), py::arg("checks") = std::vector<std::string>{},
        py::arg("seed") = 0,
        "Run exact hierarchy checks; returns (name, passed, detail) tuples.");
  m.def("qschur", &qschur, py::arg("partition"), py::arg("format") = "plain",
        "Q-Schur function of a strict partition.");
  m.def("is_bkp_tau", &is_bkp_tau, py::arg("expr"),
        "Whether a polynomial in t_1, t_3, ... satisfies the BKP bilinear identity.");
  m.def("is_mdkp_pair", &is_mdkp_pair, py::arg("tau0"), py::arg("tau1"),
        "Whether a pair of polynomials satisfies the modified DKP identity.");
  m.def("bench", &bdkp::run_bench, py::arg("sizes"),
        "Timing table for construction and verification at the given weights.");

  m.attr("__version__") = "0.1.0";
}
