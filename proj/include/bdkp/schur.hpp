#pragma once

#include <map>
#include <vector>

#include "bdkp/mpoly.hpp"

namespace bdkp {

/// Argument of the elementary Schur polynomials: a sequence of slots
/// arg_1, arg_2, ... of which only 1..order() are defined. s_k reads slots
/// up to k, so truncation orders stay explicit and exactness is auditable.
class SchurArg {
 public:
  explicit SchurArg(int order);

  int order() const { return order_; }
  void set_slot(int i, MPoly value);
  /// Slot i for 1 <= i <= order(); missing slots in range are zero.
  const MPoly& slot(int i) const;

  /// t-tilde: slot j = t_j for odd j, 0 for even j.
  static SchurArg times(int order, bool primed = false);
  /// t-tilde + c: odd slots shifted by a time variable, all slots offset by c.
  static SchurArg times_shifted(int order, const std::vector<Scalar>& c, bool primed = false);
  /// Difference argument: slot j = t_j - t'_j for odd j, 0 for even j.
  static SchurArg times_diff(int order);
  /// Constant slots only (the c_j of the shifted arguments, without times).
  static SchurArg constants(int order, const std::vector<Scalar>& c);

 private:
  int order_;
  std::map<int, MPoly> slots_;
};

/// s_k(arg) via the recurrence k s_k = sum_{i=1..k} i arg_i s_{k-i}, s_0 = 1.
MPoly elementary_schur(int k, const SchurArg& arg);
/// s_0..s_kmax in one pass.
std::vector<MPoly> schur_sequence(int kmax, const SchurArg& arg);

/// Log-series coefficients: given 1 + sum_{m>=1} a_m z^m (a[0] = a_1, ...),
/// returns c_1..c_order with exp(sum c_i z^i) = 1 + sum a_m z^m (mod z^{order+1}).
std::vector<Scalar> coeffs_to_c(const std::vector<Scalar>& a, int order);

/// Inverse direction: coefficients of exp(sum c_i z^i) - 1 up to z^order.
std::vector<Scalar> exp_series(const std::vector<Scalar>& c, int order);

}  // namespace bdkp
