#pragma once

#include <map>
#include <stdexcept>

#include "bdkp/schur.hpp"

namespace bdkp {

struct ZeroTauError : std::invalid_argument {
  ZeroTauError() : std::invalid_argument("residual of the zero polynomial requested") {}
};

/// Finite Laurent polynomial in z with MPoly coefficients.
class LaurentZ {
 public:
  LaurentZ() = default;

  const std::map<int, MPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  MPoly coeff(int power) const;
  int min_power() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

  void add_term(int power, const MPoly& c);

  LaurentZ operator+(const LaurentZ& o) const;
  LaurentZ operator*(const LaurentZ& o) const;

 private:
  std::map<int, MPoly> coeffs_;
};

/// Exact Taylor realization of the shift operator
/// exp(-sign * 2 sum_{j odd} d/dt_j z^{-j}/j): substitutes
/// t_j -> t_j - sign * 2 z^{-j} / j into the polynomial, writing the
/// result over the primed variable set when requested.
LaurentZ miwa_shift(const MPoly& tau, int sign, bool primed);

/// Kernel of the bilinear residue: coefficients of
/// exp(sum_{j odd} (t_j - t'_j) z^j) = sum_m s_m(t~ - t~') z^m up to z^order.
LaurentZ xi_kernel(int order);

/// Residue form of the BKP hierarchy: returns
///   Res_{z=0} dz/z  K(z) tau(t - 2[z^-1]) tau(t' + 2[z^-1])  -  tau(t) tau(t'),
/// exactly as a polynomial in t and t'. Zero iff tau is a BKP tau-function.
MPoly bkp_residual(const MPoly& tau);

/// Residue form of the modified DKP identity:
///   Res_{z=0} dz/z K(z) tau0(t - 2[z^-1]) tau1(t' + 2[z^-1])
///     = 2 tau1(t) tau0(t') - tau0(t) tau1(t').
/// Returns the difference; zero iff (tau0, tau1) is an MDKP pair.
MPoly mdkp_residual(const MPoly& tau0, const MPoly& tau1);

}  // namespace bdkp
