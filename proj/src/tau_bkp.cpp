#include "bdkp/tau_bkp.hpp"

#include <algorithm>

#include "bdkp/pfaffian.hpp"

namespace bdkp {

PartitionExt::PartitionExt(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw NotStrictError("negative part in partition");
    if (i > 0 && parts_[i - 1] <= parts_[i])
      throw NotStrictError("partition parts must strictly decrease");
  }
}

int PartitionExt::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

PartitionExt PartitionExt::dropped(int index1) const {
  if (index1 < 1 || index1 > size()) throw std::out_of_range("partition index out of range");
  std::vector<int> out = parts_;
  out.erase(out.begin() + (index1 - 1));
  return PartitionExt(std::move(out));
}

MPoly chi(int li, int lj, const SchurArg& ci, const SchurArg& cj) {
  if (li < 0 || lj < 0) return MPoly();
  if (li == lj) return MPoly();
  if (li < lj) return -chi(lj, li, cj, ci);
  auto si = schur_sequence(li + lj, ci);
  auto sj = schur_sequence(lj, cj);
  MPoly acc = si[li] * sj[lj] * Scalar(1, 2);
  for (int l = 1; l <= lj; ++l) {
    MPoly term = si[li + l] * sj[lj - l];
    if (l % 2 == 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

MPoly tau_bkp_from_args(const std::vector<int>& parts, const std::vector<SchurArg>& args) {
  if (parts.size() != args.size()) throw std::invalid_argument("parts/args size mismatch");
  if (parts.size() % 2 != 0) throw OddSizeError();
  int n = int(parts.size());
  SkewMatrix<MPoly> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.at(i, j) = chi(parts[i], parts[j], args[i], args[j]);
  return pf_expand(a);
}

namespace {

// Pads an odd list with a zero part and zero constants; validates shape.
std::pair<std::vector<int>, ShiftConstants> padded_even_parts(const PartitionExt& lambda,
                                                              const ShiftConstants& c) {
  if (int(c.size()) != lambda.size())
    throw std::invalid_argument("one constant sequence per part required");
  std::vector<int> parts = lambda.parts();
  ShiftConstants cc = c;
  if (parts.size() % 2 != 0) {
    parts.push_back(0);
    cc.emplace_back();
  }
  return {std::move(parts), std::move(cc)};
}

int schur_order_for(const std::vector<int>& parts) {
  if (parts.empty()) return 0;
  return parts[0] + (parts.size() > 1 ? parts[1] : 0);
}

}  // namespace

TauPoly tau_bkp(const PartitionExt& lambda, const ShiftConstants& c) {
  if (!lambda.is_strict()) throw NotStrictError("BKP partition must have positive parts");
  auto [parts, cc] = padded_even_parts(lambda, c);
  int order = schur_order_for(parts);
  std::vector<SchurArg> args;
  args.reserve(parts.size());
  for (const auto& cj : cc) args.push_back(SchurArg::times_shifted(order, cj));
  return TauPoly{tau_bkp_from_args(parts, args), TauFamily::bkp, lambda, c};
}

TauPoly q_schur(const PartitionExt& lambda) {
  return tau_bkp(lambda, ShiftConstants(lambda.size()));
}

std::pair<PartitionExt, ShiftConstants> generators_to_constants(
    const std::vector<GeneratorB>& gens) {
  std::vector<int> pivots;
  pivots.reserve(gens.size());
  for (const auto& g : gens) pivots.push_back(g.pivot);
  PartitionExt lambda(pivots);  // validates strict decrease
  if (!lambda.is_strict()) throw NotStrictError("B generator pivots must be positive");

  int order = lambda.empty() ? 0 : lambda.part(0) + (lambda.size() > 1 ? lambda.part(1) : 0);
  ShiftConstants c;
  c.reserve(gens.size());
  for (const auto& g : gens) {
    // 1 + sum_{n < pivot} a_{-n} z^{pivot - n}
    std::vector<Scalar> series;
    for (const auto& [n, a] : g.coeff) {
      if (n >= g.pivot)
        throw std::invalid_argument("B generator coefficient at or above pivot");
      int power = g.pivot - n;
      if (power > order) continue;  // beyond every consumed Schur order
      if (int(series.size()) < power) series.resize(power);
      series[power - 1] = Scalar(a);
    }
    c.push_back(coeffs_to_c(series, order));
  }
  return {std::move(lambda), std::move(c)};
}

namespace {

// One application of the lifted operator sum_l s_l(arg) phi_{l - pivot} to a
// polynomial-coefficient state. Terms beyond l = pivot + (max mode in state)
// annihilate, so the sum is finite and stays inside arg's truncation order.
FockVec<MPoly> apply_lifted_b(int pivot, const SchurArg& arg, const FockVec<MPoly>& state) {
  int lmax = pivot + state.max_mode_abs2() / 2;
  auto s = schur_sequence(lmax, arg);
  std::vector<std::pair<int, MPoly>> terms;
  terms.reserve(lmax + 1);
  for (int l = 0; l <= lmax; ++l) terms.emplace_back(2 * (l - pivot), s[l]);
  return apply_mode_terms(terms, state);
}

}  // namespace

MPoly vev_oracle_bkp(const std::vector<GeneratorB>& gens) {
  auto [lambda, c] = generators_to_constants(gens);
  int order = lambda.empty() ? 0 : lambda.part(0) + (lambda.size() > 1 ? lambda.part(1) : 0);
  auto state = FockVec<MPoly>::vacuum(Algebra::B);
  if (gens.size() % 2 != 0) state = apply_mode(0, state);  // phi_0 padding
  for (std::size_t i = gens.size(); i-- > 0;) {
    SchurArg arg = SchurArg::times_shifted(order, c[i]);
    state = apply_lifted_b(lambda.part(int(i)), arg, state);
  }
  return state.vacuum_coeff();
}

namespace {

void enumerate_strict(int remaining, int max_part, std::vector<int>& acc,
                      std::vector<PartitionExt>& out) {
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    out.emplace_back(acc);
    enumerate_strict(remaining - p, p - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<PartitionExt> strict_partitions_up_to(int max_weight, bool include_empty) {
  std::vector<PartitionExt> out;
  if (include_empty) out.emplace_back();
  std::vector<int> acc;
  enumerate_strict(max_weight, max_weight, acc, out);
  return out;
}

std::vector<PartitionExt> extended_strict_partitions_up_to(int max_weight) {
  std::vector<PartitionExt> out;
  for (const auto& p : strict_partitions_up_to(max_weight, /*include_empty=*/true)) {
    out.push_back(p);
    std::vector<int> with_zero = p.parts();
    with_zero.push_back(0);
    out.emplace_back(std::move(with_zero));
  }
  return out;
}

}  // namespace bdkp
