#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "bdkp/fock.hpp"
#include "bdkp/schur.hpp"

namespace bdkp {

struct NotStrictError : std::invalid_argument {
  explicit NotStrictError(const std::string& what) : std::invalid_argument(what) {}
};

/// Extended strict partition: lambda_1 > lambda_2 > ... > lambda_k >= 0.
/// Strict flavor additionally has lambda_k > 0.
class PartitionExt {
 public:
  PartitionExt() = default;
  explicit PartitionExt(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }
  int size() const { return int(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  bool is_strict() const { return parts_.empty() || parts_.back() > 0; }

  /// Copy with the 1-based index removed; strict decrease survives deletion.
  PartitionExt dropped(int index1) const;

  bool operator==(const PartitionExt& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
};

/// Per-part shift constants c_j = (c_{1j}, c_{2j}, ...), finitely supported.
using ShiftConstants = std::vector<std::vector<Scalar>>;

enum class TauFamily { bkp, dkp0, dkp1 };

/// A constructed polynomial tau-function together with its provenance.
struct TauPoly {
  MPoly poly;
  TauFamily family = TauFamily::bkp;
  PartitionExt partition;
  ShiftConstants constants;
};

/// Pairing kernel of the BKP Pfaffian: for li > lj >= 0,
///   chi = 1/2 s_li(ci) s_lj(cj) + sum_{l=1}^{lj} (-1)^l s_{li+l}(ci) s_{lj-l}(cj),
/// extended antisymmetrically, zero when an index is negative.
MPoly chi(int li, int lj, const SchurArg& ci, const SchurArg& cj);

/// Pfaffian of the chi matrix over explicit Schur arguments (one per part,
/// strictly decreasing parts, even count). The symbolic entry point behind
/// tau_bkp, also used directly by the verification suites.
MPoly tau_bkp_from_args(const std::vector<int>& parts, const std::vector<SchurArg>& args);

/// All polynomial BKP tau-functions: Pf(chi_{li,lj}(t~+c_i, t~+c_j)).
/// Odd part counts get a zero part with zero constants appended, which
/// multiplies the expectation value by 1/sqrt(2).
TauPoly tau_bkp(const PartitionExt& lambda, const ShiftConstants& c);

/// tau_bkp at zero constants: the Q-Schur function of lambda (up to the
/// global normalization of the chi kernel), weighted-homogeneous of
/// degree |lambda|.
TauPoly q_schur(const PartitionExt& lambda);

/// Reads the partition and shift constants off a generator list: pivots
/// become parts and c_j is the log-series of 1 + sum a_{-n,j} z^{lambda_j - n},
/// truncated at the largest Schur order any matrix entry consumes.
std::pair<PartitionExt, ShiftConstants> generators_to_constants(
    const std::vector<GeneratorB>& gens);

/// Independent route to the same polynomial: applies the symbolically
/// lifted operators v_j(t~+c_j) = sum_l s_l(t~+c_j) phi_{l-lambda_j} to the
/// vacuum in the Fock module and reads off <0|...|0>, with phi_0 appended
/// for odd counts.
MPoly vev_oracle_bkp(const std::vector<GeneratorB>& gens);

/// Strict partitions with 0 < weight <= max_weight (plus the empty one when
/// include_empty), in deterministic order.
std::vector<PartitionExt> strict_partitions_up_to(int max_weight, bool include_empty = false);
/// Extended strict partitions (one optional trailing zero part) with
/// weight <= max_weight, including () and (0).
std::vector<PartitionExt> extended_strict_partitions_up_to(int max_weight);

}  // namespace bdkp
