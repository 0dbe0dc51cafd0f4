#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bdkp/hirota.hpp"
#include "bdkp/problem.hpp"
#include "bdkp/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bdkp::SpecError(path, "cannot open file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw bdkp::SpecError(path, e.what());
  }
  return j;
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

int report_and_exit_code(const std::vector<bdkp::CheckResult>& results) {
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int verify_polynomials(const std::vector<bdkp::MPoly>& taus, const std::set<std::string>& checks) {
  for (const auto& c : checks)
    if (c == "fermionic" || c == "annihilator")
      throw bdkp::ChecksUnavailableError(c + " checks need generator-form input");
  std::vector<bdkp::CheckResult> results;
  for (const auto& c : checks) {
    if (c == "bkp") {
      for (std::size_t i = 0; i < taus.size(); ++i) {
        std::string name = taus.size() > 1 ? "bkp[tau" + std::to_string(i) + "]" : "bkp[tau]";
        if (taus[i].is_zero()) {
          results.push_back({name, false, "zero tau-function"});
          continue;
        }
        bdkp::MPoly r = bdkp::bkp_residual(taus[i]);
        results.push_back(
            {name, r.is_zero(),
             r.is_zero() ? "" : "witness " + bdkp::to_plain(bdkp::MPoly::term(
                                                 r.terms().begin()->second, r.terms().begin()->first))});
      }
    } else if (c == "mdkp") {
      if (taus.size() != 2) throw bdkp::SpecError("checks", "mdkp check needs a (tau0, tau1) pair");
      bdkp::MPoly r = bdkp::mdkp_residual(taus[0], taus[1]);
      results.push_back(
          {"mdkp[pair]", r.is_zero(),
           r.is_zero() ? "" : "witness " + bdkp::to_plain(bdkp::MPoly::term(
                                               r.terms().begin()->second, r.terms().begin()->first))});
    } else {
      throw bdkp::SpecError("checks", "unknown check \"" + c + "\"");
    }
  }
  return report_and_exit_code(results);
}

std::set<std::string> parse_check_list(const std::string& arg) {
  std::set<std::string> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial tau-functions of the BKP, DKP and MDKP hierarchies"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string format = "plain";
  auto* cmd_tau = app.add_subcommand("tau", "Construct a tau-function from a JSON spec");
  cmd_tau->add_option("spec", spec_path, "Path to the problem spec JSON")->required();
  cmd_tau->add_option("--format", format, "plain, latex or json")
      ->check(CLI::IsMember({"plain", "latex", "json"}));
  std::uint64_t tau_seed = 0;
  cmd_tau->add_option("--seed", tau_seed, "Seed for \"c\": \"random\" specs");

  std::vector<std::string> verify_inputs;
  std::string checks_arg;
  std::uint64_t seed = 0;
  auto* cmd_verify = app.add_subcommand("verify", "Run exact hierarchy checks");
  cmd_verify->add_option("input", verify_inputs,
                         "Spec/tau JSON file, or a plain polynomial expression")
      ->required();
  cmd_verify->add_option("--checks", checks_arg, "Comma list from bkp,mdkp,fermionic,annihilator");
  cmd_verify->add_option("--seed", seed, "Seed for \"c\": \"random\" specs");

  std::string sizes_arg = "4,6,8";
  auto* cmd_bench = app.add_subcommand("bench", "Time tau construction and verification");
  cmd_bench->add_option("--sizes", sizes_arg, "Comma list of partition weights");

  std::string partition_arg;
  std::string qformat = "plain";
  auto* cmd_qschur = app.add_subcommand("qschur", "Print the Q-Schur function of a partition");
  cmd_qschur->add_option("--partition", partition_arg, "Comma list, e.g. 3,2,1")->required();
  cmd_qschur->add_option("--format", qformat, "plain, latex or json")
      ->check(CLI::IsMember({"plain", "latex", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_tau) {
      auto spec = bdkp::ProblemSpec::from_json(load_json(spec_path));
      auto built = bdkp::build_taus(spec, tau_seed);
      bdkp::RenderFormat f = format == "latex"  ? bdkp::RenderFormat::latex
                             : format == "json" ? bdkp::RenderFormat::json
                                                : bdkp::RenderFormat::plain;
      std::cout << bdkp::render_taus(built, f) << "\n";
      return kExitOk;
    }

    if (*cmd_verify) {
      std::set<std::string> checks =
          checks_arg.empty() ? std::set<std::string>{} : parse_check_list(checks_arg);
      // Inputs: a JSON file (spec or rendered tau), or an inline polynomial
      // expression (optionally introduced by the word "tau").
      if (verify_inputs.size() == 1 && file_exists(verify_inputs[0])) {
        nlohmann::json j = load_json(verify_inputs[0]);
        if (j.contains("terms") || j.contains("tau0")) {
          std::vector<bdkp::MPoly> taus;
          if (j.contains("terms")) {
            taus.push_back(bdkp::poly_from_json(j));
          } else {
            taus.push_back(bdkp::poly_from_json(j.at("tau0")));
            taus.push_back(bdkp::poly_from_json(j.at("tau1")));
          }
          if (checks.empty()) {
            checks.insert("bkp");
            if (taus.size() == 2) checks.insert("mdkp");
          }
          return verify_polynomials(taus, checks);
        }
        auto spec = bdkp::ProblemSpec::from_json(j);
        auto built = bdkp::build_taus(spec, seed);
        if (checks.empty()) checks = bdkp::applicable_checks(spec);
        return report_and_exit_code(bdkp::run_checks(built, checks));
      }
      std::vector<std::string> exprs = verify_inputs;
      if (exprs.size() > 1 && exprs[0] == "tau") exprs.erase(exprs.begin());
      std::vector<bdkp::MPoly> taus;
      for (const auto& e : exprs) {
        try {
          taus.push_back(bdkp::parse_poly(e));
        } catch (const std::invalid_argument& err) {
          throw bdkp::SpecError(e, err.what());
        }
      }
      if (checks.empty()) {
        checks.insert("bkp");
        if (taus.size() == 2) checks.insert("mdkp");
      }
      return verify_polynomials(taus, checks);
    }

    if (*cmd_bench) {
      std::vector<int> sizes;
      std::stringstream ss(sizes_arg);
      std::string item;
      while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
      std::cout << bdkp::run_bench(sizes);
      return kExitOk;
    }

    if (*cmd_qschur) {
      std::vector<int> parts;
      std::stringstream ss(partition_arg);
      std::string item;
      while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
      bdkp::TauPoly tau = bdkp::q_schur(bdkp::PartitionExt(parts));
      if (qformat == "latex")
        std::cout << bdkp::to_latex(tau.poly) << "\n";
      else if (qformat == "json")
        std::cout << bdkp::poly_to_json(tau.poly).dump(2) << "\n";
      else
        std::cout << bdkp::to_plain(tau.poly) << "\n";
      return kExitOk;
    }
  } catch (const bdkp::SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const bdkp::ChecksUnavailableError& e) {
    std::cerr << "checks unavailable: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
