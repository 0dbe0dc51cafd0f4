#include "bdkp/schur.hpp"

#include <stdexcept>

namespace bdkp {

namespace {
const MPoly kZero;
}

SchurArg::SchurArg(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative SchurArg order");
}

void SchurArg::set_slot(int i, MPoly value) {
  if (i < 1 || i > order_) throw std::out_of_range("SchurArg slot out of range");
  if (value.is_zero())
    slots_.erase(i);
  else
    slots_[i] = std::move(value);
}

const MPoly& SchurArg::slot(int i) const {
  if (i < 1 || i > order_) throw std::out_of_range("SchurArg slot beyond truncation order");
  auto it = slots_.find(i);
  return it == slots_.end() ? kZero : it->second;
}

SchurArg SchurArg::times(int order, bool primed) {
  return times_shifted(order, {}, primed);
}

SchurArg SchurArg::times_shifted(int order, const std::vector<Scalar>& c, bool primed) {
  SchurArg arg(order);
  for (int i = 1; i <= order; ++i) {
    MPoly v;
    if (i % 2 == 1)
      v = MPoly::var(primed ? VarId::time_primed(i) : VarId::time(i));
    if (i <= int(c.size())) v += MPoly(c[i - 1]);
    arg.set_slot(i, std::move(v));
  }
  return arg;
}

SchurArg SchurArg::times_diff(int order) {
  SchurArg arg(order);
  for (int i = 1; i <= order; i += 2)
    arg.set_slot(i, MPoly::var(VarId::time(i)) - MPoly::var(VarId::time_primed(i)));
  return arg;
}

SchurArg SchurArg::constants(int order, const std::vector<Scalar>& c) {
  SchurArg arg(order);
  for (int i = 1; i <= order && i <= int(c.size()); ++i) arg.set_slot(i, MPoly(c[i - 1]));
  return arg;
}

std::vector<MPoly> schur_sequence(int kmax, const SchurArg& arg) {
  if (kmax < 0) throw std::invalid_argument("negative Schur index");
  std::vector<MPoly> s;
  s.reserve(kmax + 1);
  s.push_back(MPoly(1));
  for (int k = 1; k <= kmax; ++k) {
    MPoly acc;
    for (int i = 1; i <= k; ++i) acc += arg.slot(i) * s[k - i] * Scalar(i);
    s.push_back(acc * Scalar(1, k));
  }
  return s;
}

MPoly elementary_schur(int k, const SchurArg& arg) { return schur_sequence(k, arg).back(); }

std::vector<Scalar> coeffs_to_c(const std::vector<Scalar>& a, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  auto coeff = [&](int m) { return m >= 1 && m <= int(a.size()) ? a[m - 1] : Scalar(); };
  // n c_n = n a_n - sum_{k=1}^{n-1} k c_k a_{n-k}, from (1+A) L' = A'.
  std::vector<Scalar> c(order);
  for (int n = 1; n <= order; ++n) {
    Scalar acc = coeff(n) * Scalar(n);
    for (int k = 1; k < n; ++k) acc -= c[k - 1] * coeff(n - k) * Scalar(k);
    c[n - 1] = acc * Scalar(1, n);
  }
  return c;
}

std::vector<Scalar> exp_series(const std::vector<Scalar>& c, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  auto coeff = [&](int m) { return m >= 1 && m <= int(c.size()) ? c[m - 1] : Scalar(); };
  // E_0 = 1, n E_n = sum_{k=1}^{n} k c_k E_{n-k}.
  std::vector<Scalar> e(order + 1);
  e[0] = Scalar(1);
  for (int n = 1; n <= order; ++n) {
    Scalar acc;
    for (int k = 1; k <= n; ++k) acc += coeff(k) * e[n - k] * Scalar(k);
    e[n] = acc * Scalar(1, n);
  }
  return std::vector<Scalar>(e.begin() + 1, e.end());
}

}  // namespace bdkp
