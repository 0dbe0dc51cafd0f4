#include "bdkp/tau_dkp.hpp"

#include <algorithm>

#include "bdkp/pfaffian.hpp"

namespace bdkp {

MPoly rho_pair(int li, int lj, const SchurArg& ci, const SchurArg& cj, const Scalar& bi,
               const Scalar& bj) {
  if (li < 0 || lj < 0) return MPoly();
  if (li == lj) return MPoly();
  if (li < lj) return -rho_pair(lj, li, cj, ci, bj, bi);
  auto si = schur_sequence(li + lj, ci);
  auto sj = schur_sequence(lj, cj);
  MPoly acc = (si[li] * Scalar::inv_sqrt2() - MPoly(bi)) * (sj[lj] * Scalar::inv_sqrt2() + MPoly(bj));
  for (int l = 1; l <= lj; ++l) {
    MPoly term = si[li + l] * sj[lj - l];
    if (l % 2 == 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

MPoly rho_single(int lj, const SchurArg& cj, const Scalar& bj) {
  if (lj < 0) throw std::invalid_argument("rho_single needs a nonnegative index");
  return elementary_schur(lj, cj) * Scalar::inv_sqrt2() + MPoly(bj);
}

namespace {

void check_shape(const DkpParams& p) {
  if (int(p.c.size()) != p.partition.size() || int(p.b.size()) != p.partition.size())
    throw std::invalid_argument("one c sequence and one b scalar per part required");
}

int schur_order_for(const PartitionExt& lambda) {
  if (lambda.empty()) return 0;
  return lambda.part(0) + (lambda.size() > 1 ? lambda.part(1) : 0);
}

std::vector<SchurArg> shifted_args(const DkpParams& p, int order) {
  std::vector<SchurArg> args;
  args.reserve(p.c.size());
  for (const auto& cj : p.c) args.push_back(SchurArg::times_shifted(order, cj));
  return args;
}

}  // namespace

TauPoly tau_dkp_even(const DkpParams& params) {
  check_shape(params);
  int k = params.partition.size();
  if (k % 2 != 0) throw OddCountError();
  int order = schur_order_for(params.partition);
  auto args = shifted_args(params, order);
  SkewMatrix<MPoly> a(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      a.at(i, j) = rho_pair(params.partition.part(i), params.partition.part(j), args[i], args[j],
                            params.b[i], params.b[j]);
  return TauPoly{pf_expand(a), TauFamily::dkp0, params.partition, params.c};
}

TauPoly tau_dkp_odd(const DkpParams& params) {
  check_shape(params);
  int k = params.partition.size();
  if (k % 2 != 1) throw EvenCountError();
  int order = schur_order_for(params.partition);
  auto args = shifted_args(params, order);
  SkewMatrix<MPoly> a(k + 1);
  for (int j = 0; j < k; ++j)
    a.at(0, j + 1) = rho_single(params.partition.part(j), args[j], params.b[j]);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      a.at(i + 1, j + 1) = rho_pair(params.partition.part(i), params.partition.part(j), args[i],
                                    args[j], params.b[i], params.b[j]);
  return TauPoly{pf_expand(a), TauFamily::dkp1, params.partition, params.c};
}

namespace {

DkpParams drop_part(const DkpParams& p, int index1) {
  DkpParams out;
  out.partition = p.partition.dropped(index1);
  out.c = p.c;
  out.c.erase(out.c.begin() + (index1 - 1));
  out.b = p.b;
  out.b.erase(out.b.begin() + (index1 - 1));
  return out;
}

}  // namespace

std::pair<TauPoly, TauPoly> mdkp_pair(const DkpParams& params, int drop_index, const Scalar& a0,
                                      const Scalar& a1, MdkpVariant variant) {
  check_shape(params);
  if (drop_index < 1 || drop_index > params.partition.size()) throw IndexOutOfRangeError();
  TauPoly tau0, tau1;
  if (variant == MdkpVariant::odd_drop) {
    if (params.partition.size() % 2 != 1) throw EvenCountError();
    tau1 = tau_dkp_odd(params);
    tau0 = tau_dkp_even(drop_part(params, drop_index));
  } else {
    if (params.partition.size() % 2 != 0) throw OddCountError();
    tau0 = tau_dkp_even(params);
    tau1 = tau_dkp_odd(drop_part(params, drop_index));
  }
  tau0.poly *= a0;
  tau1.poly *= a1;
  return {std::move(tau0), std::move(tau1)};
}

DkpParams generator_d_to_params(const std::vector<GeneratorD>& gens) {
  std::vector<int> pivots;
  pivots.reserve(gens.size());
  for (const auto& g : gens) pivots.push_back(g.pivot);
  DkpParams out;
  out.partition = PartitionExt(pivots);  // validates strict decrease
  int order = schur_order_for(out.partition);

  for (const auto& g : gens) {
    for (const auto& [n, a] : g.coeff)
      if (n >= g.pivot)
        throw std::invalid_argument("D generator coefficient at or above pivot");
    // a_{-n-1/2}: explicit corrections only; the pivot supplies the leading
    // 1 of the series. A 0-pivot part is always last and only scales the
    // tau, so its phi_{-1/2} normalization never feeds the b scalar.
    auto a_of = [&](int n) {
      auto it = g.coeff.find(n);
      return it == g.coeff.end() ? Scalar() : Scalar(it->second);
    };
    // series coefficient of z^m is b_{m - lambda} in the integer-indexed basis
    std::vector<Scalar> series(order);
    for (int m = 1; m <= order; ++m) {
      int n = g.pivot - m;
      Scalar bm;
      if (n >= 1)
        bm = a_of(n);
      else if (n == 0)
        bm = (a_of(-1) + a_of(0)) * Scalar::inv_sqrt2();
      else
        bm = (-n) % 2 == 0 ? a_of(n - 1) : -a_of(n - 1);
      series[m - 1] = bm;
    }
    out.c.push_back(coeffs_to_c(series, order));
    out.b.push_back((a_of(0) - a_of(-1)) * Scalar(1, 2));
  }
  return out;
}

namespace {

// sum_l s_l(arg) phi^e_{l-pivot} + b (phi_{-1/2} - phi_{1/2}), expanded in the
// half-integer modes: phi^e_{-i} = phi_{-i-1/2}, phi^e_0 = (phi_{-1/2}+phi_{1/2})/sqrt2,
// phi^e_i = (-1)^i phi_{i+1/2}.
FockVec<MPoly> apply_lifted_d(int pivot, const SchurArg& arg, const Scalar& b,
                              const FockVec<MPoly>& state) {
  int m2 = state.max_mode_abs2();
  int lmax = pivot + std::max(0, (m2 - 1) / 2);
  auto s = schur_sequence(lmax, arg);
  std::vector<std::pair<int, MPoly>> terms;
  for (int l = 0; l <= lmax; ++l) {
    int m = l - pivot;
    if (m < 0) {
      terms.emplace_back(2 * m - 1, s[l]);
    } else if (m == 0) {
      terms.emplace_back(-1, s[l] * Scalar::inv_sqrt2());
      terms.emplace_back(1, s[l] * Scalar::inv_sqrt2());
    } else {
      terms.emplace_back(2 * m + 1, m % 2 == 0 ? s[l] : -s[l]);
    }
  }
  terms.emplace_back(-1, MPoly(b));
  terms.emplace_back(1, MPoly(-b));
  return apply_mode_terms(terms, state);
}

}  // namespace

MPoly vev_oracle_dkp(const DkpParams& params) {
  check_shape(params);
  int order = schur_order_for(params.partition);
  auto state = FockVec<MPoly>::vacuum(Algebra::D);
  for (int i = params.partition.size(); i-- > 0;) {
    SchurArg arg = SchurArg::times_shifted(order, params.c[i]);
    state = apply_lifted_d(params.partition.part(i), arg, params.b[i], state);
  }
  if (params.partition.size() % 2 == 1) state = apply_mode(1, state);  // <0|phi_{1/2}
  return state.vacuum_coeff();
}

MPoly vev_oracle_dkp(const std::vector<GeneratorD>& gens) {
  return vev_oracle_dkp(generator_d_to_params(gens));
}

}  // namespace bdkp
