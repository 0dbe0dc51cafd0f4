#include "bdkp/hirota.hpp"

namespace bdkp {

MPoly LaurentZ::coeff(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? MPoly() : it->second;
}

void LaurentZ::add_term(int power, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LaurentZ LaurentZ::operator+(const LaurentZ& o) const {
  LaurentZ out = *this;
  for (const auto& [p, c] : o.coeffs_) out.add_term(p, c);
  return out;
}

LaurentZ LaurentZ::operator*(const LaurentZ& o) const {
  LaurentZ out;
  for (const auto& [pa, ca] : coeffs_)
    for (const auto& [pb, cb] : o.coeffs_) out.add_term(pa + pb, ca * cb);
  return out;
}

LaurentZ miwa_shift(const MPoly& tau, int sign, bool primed) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("shift sign must be +-1");
  LaurentZ out;
  for (const auto& [mono, coeff] : tau.terms()) {
    // product over variables of (t*_j + delta_j)^e with delta_j = -sign*2 z^{-j}/j
    LaurentZ term;
    term.add_term(0, MPoly(coeff));
    for (const auto& [v, e] : mono.exps()) {
      if (v.kind != VarKind::time)
        throw std::invalid_argument("miwa_shift input must use unprimed time variables");
      int j = int(v.index);
      MPoly tvar = MPoly::var(primed ? VarId::time_primed(j) : VarId::time(j));
      LaurentZ binom;
      Scalar delta = Scalar(-2 * sign, j);
      Scalar delta_pow(1);
      Rational choose(1);
      for (std::uint32_t b = 0; b <= e; ++b) {
        if (b > 0) {
          delta_pow *= delta;
          choose *= Rational(e - b + 1);
          choose /= Rational(b);
        }
        MPoly c = MPoly(Scalar(choose) * delta_pow);
        for (std::uint32_t k = 0; k < e - b; ++k) c *= tvar;
        binom.add_term(-j * int(b), c);
      }
      term = term * binom;
    }
    out = out + term;
  }
  return out;
}

LaurentZ xi_kernel(int order) {
  auto s = schur_sequence(order, SchurArg::times_diff(order));
  LaurentZ out;
  for (int m = 0; m <= order; ++m) out.add_term(m, s[m]);
  return out;
}

namespace {

// z^0 coefficient of K(z) * product, expanding only the kernel orders the
// product's negative powers actually reach.
MPoly residue_z0(const LaurentZ& product) {
  int order = -product.min_power();
  LaurentZ kernel = xi_kernel(order < 0 ? 0 : order);
  MPoly acc;
  for (const auto& [m, c] : kernel.coeffs()) acc += c * product.coeff(-m);
  return acc;
}

}  // namespace

MPoly bkp_residual(const MPoly& tau) {
  if (tau.is_zero()) throw ZeroTauError();
  LaurentZ product = miwa_shift(tau, +1, false) * miwa_shift(tau, -1, true);
  return residue_z0(product) - tau * tau.to_primed();
}

MPoly mdkp_residual(const MPoly& tau0, const MPoly& tau1) {
  if (tau0.is_zero() || tau1.is_zero()) throw ZeroTauError();
  LaurentZ product = miwa_shift(tau0, +1, false) * miwa_shift(tau1, -1, true);
  // The Grassmann cross term of the theta-transport survives on the
  // theta (x) 1 sector, so the identity couples both orderings of the pair.
  return residue_z0(product) - (tau1 * tau0.to_primed() * Scalar(2) - tau0 * tau1.to_primed());
}

}  // namespace bdkp
