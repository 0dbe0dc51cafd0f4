#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bdkp/tau_dkp.hpp"

namespace bdkp {

/// Input validation failure; what() carries the offending field path.
struct SpecError : std::runtime_error {
  SpecError(const std::string& path, const std::string& msg)
      : std::runtime_error(path + ": " + msg) {}
};

/// Requested checks cannot run on this input form (e.g. fermionic checks
/// on constants-only specs).
struct ChecksUnavailableError : std::runtime_error {
  explicit ChecksUnavailableError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Hierarchy { bkp, dkp0, dkp1, mdkp };

std::string hierarchy_name(Hierarchy h);

/// Parsed problem description: a partition plus exactly one of explicit
/// shift constants or a generator list, and the pair options for mdkp.
struct ProblemSpec {
  Hierarchy hierarchy = Hierarchy::bkp;
  std::vector<int> partition;

  std::optional<ShiftConstants> c;  // explicit constants
  bool random_c = false;            // "c": "random", drawn from the verify seed
  std::optional<std::vector<Scalar>> b;

  std::optional<std::vector<GeneratorB>> generators_b;
  std::optional<std::vector<GeneratorD>> generators_d;

  int drop_index = 0;  // mdkp
  Scalar a0 = Scalar(1);
  Scalar a1 = Scalar(1);
  MdkpVariant variant = MdkpVariant::odd_drop;

  bool has_generators() const { return generators_b.has_value() || generators_d.has_value(); }

  static ProblemSpec from_json(const nlohmann::json& j);
};

/// Constructed tau(s): one for bkp/dkp0/dkp1, the (tau0, tau1) pair for mdkp.
struct BuiltTaus {
  std::vector<TauPoly> taus;
  DkpParams params;        // resolved constants actually used (bkp: b unused)
  ProblemSpec spec;
};

BuiltTaus build_taus(const ProblemSpec& spec, std::uint64_t seed);

struct CheckResult {
  std::string name;  // e.g. "bkp[tau0]"
  bool pass = false;
  std::string detail;  // witness monomial or failure reason
};

/// Runs the requested subset of {bkp, mdkp, fermionic, annihilator};
/// results come back sorted by check name then instance id.
std::vector<CheckResult> run_checks(const BuiltTaus& built, const std::set<std::string>& checks);

/// Checks that are meaningful for this spec (used as the verify default).
std::set<std::string> applicable_checks(const ProblemSpec& spec);

enum class RenderFormat { plain, latex, json };

/// Output of the tau command for a full spec (single polynomial or pair).
std::string render_taus(const BuiltTaus& built, RenderFormat format);

/// Benchmark over deterministic partitions of the given weights; returns a
/// fixed-format table. Sizes above kMaxBenchSize are refused.
inline constexpr int kMaxBenchSize = 12;
std::string run_bench(const std::vector<int>& sizes);

}  // namespace bdkp
