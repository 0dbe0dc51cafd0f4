#include "bdkp/fock.hpp"

#include <algorithm>

#include "bdkp/pfaffian.hpp"

namespace bdkp {

void CliffordVec::add_mode(int two_j, const Scalar& coeff) {
  if (!mode_valid(alg_, two_j)) throw std::invalid_argument("mode index parity vs algebra");
  if (coeff.is_zero()) return;
  auto [it, inserted] = modes_.emplace(two_j, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) modes_.erase(it);
  }
}

Scalar CliffordVec::mode_coeff(int two_j) const {
  auto it = modes_.find(two_j);
  return it == modes_.end() ? Scalar() : it->second;
}

CliffordVec CliffordVec::operator*(const Scalar& s) const {
  CliffordVec out(alg_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : modes_) out.modes_.emplace(m, c * s);
  return out;
}

CliffordVec CliffordVec::operator+(const CliffordVec& o) const {
  if (alg_ != o.alg_) throw AlgebraMismatchError();
  CliffordVec out = *this;
  for (const auto& [m, c] : o.modes_) out.add_mode(m, c);
  return out;
}

Scalar mode_form(Algebra alg, int two_i, int two_j) {
  if (two_i + two_j != 0) return Scalar();
  if (alg == Algebra::D) return Scalar(1);
  return two_i / 2 % 2 == 0 ? Scalar(1) : Scalar(-1);
}

Scalar bilinear_form(const CliffordVec& v, const CliffordVec& w) {
  if (v.algebra() != w.algebra()) throw AlgebraMismatchError();
  Scalar acc;
  for (const auto& [m, c] : v.modes()) {
    Scalar d = w.mode_coeff(-m);
    if (!d.is_zero()) acc += c * d * mode_form(v.algebra(), m, -m);
  }
  return acc;
}

CliffordVec reflection_conjugate(const CliffordVec& alpha, const CliffordVec& v) {
  Scalar norm = bilinear_form(alpha, alpha);
  if (norm.is_zero()) throw IsotropicAlphaError();
  Scalar t = Scalar(2) * bilinear_form(alpha, v) * norm.inverse();
  return (-v) + alpha * t;
}

Scalar vev(const std::vector<CliffordVec>& ops, LeftState left) {
  Algebra alg = ops.empty() ? Algebra::B : ops.front().algebra();
  if (left == LeftState::phi_half) alg = Algebra::D;
  for (const auto& op : ops)
    if (op.algebra() != alg) throw AlgebraMismatchError();
  auto state = FockVec<Scalar>::vacuum(alg);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) state = apply(*it, state);
  if (left == LeftState::phi_half) state = apply_mode(1, state);
  return state.vacuum_coeff();
}

Scalar wick_pfaffian_vev(const std::vector<CliffordVec>& ops) {
  int n = int(ops.size());
  if (n % 2 != 0) throw OddLengthError();
  if (n == 0) return Scalar(1);
  SkewMatrix<Scalar> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.at(i, j) = vev({ops[i], ops[j]});
  return pf_expand(a);
}

CliffordVec to_clifford(const GeneratorB& g) {
  if (g.pivot < 1) throw std::invalid_argument("B generator pivot must be positive");
  CliffordVec v(Algebra::B);
  v.add_mode(-2 * g.pivot, Scalar(1));
  for (const auto& [n, a] : g.coeff) {
    if (n >= g.pivot) throw std::invalid_argument("B generator coefficient at or above pivot");
    v.add_mode(-2 * n, Scalar(a));
  }
  return v;
}

CliffordVec to_clifford(const GeneratorD& g) {
  if (g.pivot < 0) throw std::invalid_argument("D generator pivot must be nonnegative");
  CliffordVec v(Algebra::D);
  v.add_mode(-2 * g.pivot - 1, Scalar(1));
  for (const auto& [n, a] : g.coeff) {
    if (n >= g.pivot) throw std::invalid_argument("D generator coefficient at or above pivot");
    v.add_mode(-2 * n - 1, Scalar(a));
  }
  return v;
}

namespace {

template <class G>
FockVec<Scalar> generator_state_impl(const std::vector<G>& gens, Algebra alg) {
  auto state = FockVec<Scalar>::vacuum(alg);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) state = apply(to_clifford(*it), state);
  return state;
}

}  // namespace

FockVec<Scalar> generator_state(const std::vector<GeneratorB>& gens) {
  return generator_state_impl(gens, Algebra::B);
}

FockVec<Scalar> generator_state(const std::vector<GeneratorD>& gens) {
  return generator_state_impl(gens, Algebra::D);
}

void TensorResidual::add(const Word& a, const Word& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto [it, inserted] = terms.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

namespace {

void accumulate_tensor(TensorResidual& res, const FockVec<Scalar>& left,
                       const FockVec<Scalar>& right, const Scalar& factor) {
  if (factor.is_zero()) return;
  for (const auto& [wl, cl] : left.terms())
    for (const auto& [wr, cr] : right.terms()) res.add(wl, wr, cl * cr * factor);
}

}  // namespace

TensorResidual fermionic_bkp_residual(const FockVec<Scalar>& tau) {
  if (tau.algebra() != Algebra::B) throw AlgebraMismatchError();
  TensorResidual res{Algebra::B, tau.max_mode_abs2() + 2, {}};
  for (int two_j = -res.window2; two_j <= res.window2; ++two_j) {
    if (!mode_valid(Algebra::B, two_j)) continue;
    auto left = apply_mode(two_j, tau);
    if (left.is_zero()) continue;
    auto right = apply_mode(-two_j, tau);
    if (right.is_zero()) continue;
    Scalar sign = two_j / 2 % 2 == 0 ? Scalar(1) : Scalar(-1);
    accumulate_tensor(res, left, right, sign);
  }
  accumulate_tensor(res, tau, tau, Scalar(-1, 2));
  return res;
}

TensorResidual fermionic_dkp_residual(const FockVec<Scalar>& tau) {
  if (tau.algebra() != Algebra::D) throw AlgebraMismatchError();
  if (tau.pure_parity() == -1) throw MixedParityError();
  TensorResidual res{Algebra::D, tau.max_mode_abs2() + 2, {}};
  for (int two_j = -res.window2; two_j <= res.window2; ++two_j) {
    if (!mode_valid(Algebra::D, two_j)) continue;
    auto left = apply_mode(two_j, tau);
    if (left.is_zero()) continue;
    auto right = apply_mode(-two_j, tau);
    if (right.is_zero()) continue;
    accumulate_tensor(res, left, right, Scalar(1));
  }
  return res;
}

TensorResidual fermionic_mdkp_residual(const FockVec<Scalar>& tau0, const FockVec<Scalar>& tau1) {
  if (tau0.algebra() != Algebra::D || tau1.algebra() != Algebra::D) throw AlgebraMismatchError();
  if (tau0.pure_parity() != 0 || tau1.pure_parity() != 1) throw ParityError();
  int window2 = std::max(tau0.max_mode_abs2(), tau1.max_mode_abs2()) + 2;
  TensorResidual res{Algebra::D, window2, {}};
  for (int two_j = -window2; two_j <= window2; ++two_j) {
    if (!mode_valid(Algebra::D, two_j)) continue;
    auto left = apply_mode(two_j, tau0);
    if (left.is_zero()) continue;
    auto right = apply_mode(-two_j, tau1);
    if (right.is_zero()) continue;
    accumulate_tensor(res, left, right, Scalar(1));
  }
  accumulate_tensor(res, tau1, tau0, Scalar(-1));
  return res;
}

namespace {

// Reduced row echelon form in place; returns pivot column per row consumed.
std::vector<int> rref(std::vector<std::vector<Scalar>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Scalar inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(int(col));
    ++row;
  }
  return pivots;
}

int rank(std::vector<std::vector<Scalar>> m) { return int(rref(m).size()); }

// Kernel basis of the column-action matrix: rows index words, columns index
// candidate modes.
std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> m,
                                              std::size_t cols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(cols);
    v[free_col] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = r < m.size() ? -m[r][free_col] : Scalar();
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Scalar>> annihilator_kernel(const FockVec<Scalar>& tau,
                                                    const std::vector<int>& modes) {
  std::map<Word, std::size_t> word_rows;
  std::vector<FockVec<Scalar>> images;
  images.reserve(modes.size());
  for (int m : modes) {
    images.push_back(apply_mode(m, tau));
    for (const auto& [w, c] : images.back().terms()) word_rows.emplace(w, 0);
  }
  std::size_t next = 0;
  for (auto& [w, idx] : word_rows) idx = next++;
  std::vector<std::vector<Scalar>> mat(word_rows.size(), std::vector<Scalar>(modes.size()));
  for (std::size_t col = 0; col < modes.size(); ++col)
    for (const auto& [w, c] : images[col].terms()) mat[word_rows.at(w)][col] = c;
  return kernel_basis(std::move(mat), modes.size());
}

}  // namespace

int annihilator_quotient_dim(const FockVec<Scalar>& tau0, const FockVec<Scalar>& tau1,
                             int window2) {
  if (tau0.algebra() != tau1.algebra()) throw AlgebraMismatchError();
  if (window2 < std::max(tau0.max_mode_abs2(), tau1.max_mode_abs2()))
    throw WindowTooSmallError();
  std::vector<int> modes;
  for (int m = -window2; m <= window2; ++m)
    if (mode_valid(tau0.algebra(), m)) modes.push_back(m);
  auto k0 = annihilator_kernel(tau0, modes);
  auto k1 = annihilator_kernel(tau1, modes);
  std::vector<std::vector<Scalar>> joint = k0;
  joint.insert(joint.end(), k1.begin(), k1.end());
  int sum_dim = rank(std::move(joint));
  // dim((K0+K1)/(K0 cap K1)) = 2 dim(K0+K1) - dim K0 - dim K1
  return 2 * sum_dim - int(k0.size()) - int(k1.size());
}

}  // namespace bdkp
