#pragma once

#include <utility>
#include <vector>

#include "bdkp/tau_bkp.hpp"

namespace bdkp {

struct OddCountError : std::invalid_argument {
  OddCountError() : std::invalid_argument("even part count required") {}
};
struct EvenCountError : std::invalid_argument {
  EvenCountError() : std::invalid_argument("odd part count required") {}
};
struct IndexOutOfRangeError : std::out_of_range {
  IndexOutOfRangeError() : std::out_of_range("drop index outside the partition") {}
};

/// DKP construction data: extended strict partition, per-part shift
/// constants c_j and per-part scalars b_j.
struct DkpParams {
  PartitionExt partition;
  ShiftConstants c;
  std::vector<Scalar> b;
};

/// Pairing kernel of the DKP Pfaffians: for li > lj >= 0,
///   rho = (s_li(ci)/sqrt2 - bi)(s_lj(cj)/sqrt2 + bj)
///         + sum_{l=1}^{lj} (-1)^l s_{li+l}(ci) s_{lj-l}(cj),
/// extended antisymmetrically; reduces to chi at b = 0.
MPoly rho_pair(int li, int lj, const SchurArg& ci, const SchurArg& cj, const Scalar& bi,
               const Scalar& bj);

/// Border entry of the odd-sector Pfaffian: s_lj(cj)/sqrt2 + bj.
MPoly rho_single(int lj, const SchurArg& cj, const Scalar& bj);

/// All polynomial DKP tau-functions in V_0: Pf(rho_{li,lj}) over an even
/// number of parts.
TauPoly tau_dkp_even(const DkpParams& params);

/// All polynomial DKP tau-functions in V_1: Pfaffian of the bordered
/// (2n+2) x (2n+2) matrix whose synthetic index 0 carries the rho_single
/// entries and whose inner block is rho_{li,lj}.
TauPoly tau_dkp_odd(const DkpParams& params);

enum class MdkpVariant { odd_drop, even_drop };

/// Modified-DKP pairs: tau1 from the full odd list and tau0 with part j
/// dropped (odd_drop), or tau0 from the full even list and tau1 with part
/// j dropped (even_drop), scaled by a0 and a1.
std::pair<TauPoly, TauPoly> mdkp_pair(const DkpParams& params, int drop_index, const Scalar& a0,
                                      const Scalar& a1, MdkpVariant variant);

/// Converts D generators to DKP construction data: the half-integer
/// coefficients are regrouped into the integer-indexed series
///   b_{-k} = a_{-k-1/2}, b_k = (-1)^k a_{k+1/2}, b_0 = (a_{1/2}+a_{-1/2})/sqrt2,
/// the scalar is b = (a_{-1/2}-a_{1/2})/2, and c_j is the log-series of
/// 1 + sum_{n<lambda_j} b_{-n} z^{lambda_j-n}.
DkpParams generator_d_to_params(const std::vector<GeneratorD>& gens);

/// Brute-force route to the same polynomials: sequential Clifford
/// application of the lifted operators
///   v_j(t~+c_j; b_j) = sum_l s_l(t~+c_j) phi^e_{l-lambda_j} + b_j (phi_{-1/2} - phi_{1/2})
/// with the half-integer embedding phi^e, read off against <0| for even
/// counts and <0|phi_{1/2} for odd counts.
MPoly vev_oracle_dkp(const std::vector<GeneratorD>& gens);
MPoly vev_oracle_dkp(const DkpParams& params);

}  // namespace bdkp
