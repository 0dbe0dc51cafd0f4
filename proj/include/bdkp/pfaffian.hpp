#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace bdkp {

struct OddSizeError : std::invalid_argument {
  OddSizeError() : std::invalid_argument("Pfaffian of odd-sized matrix requested") {}
};

/// Skew-symmetric matrix over a commutative ring R (Scalar or MPoly).
/// Only the strictly upper triangle is stored; a_ji = -a_ij and a_ii = 0
/// hold by construction.
template <class R>
class SkewMatrix {
 public:
  explicit SkewMatrix(int n) : n_(n), upper_(std::size_t(n) * (n - 1) / 2) {
    if (n < 0) throw std::invalid_argument("negative matrix size");
  }

  int size() const { return n_; }

  /// Mutable access to the stored entry a_ij, i < j.
  R& at(int i, int j) {
    check_upper(i, j);
    return upper_[offset(i, j)];
  }
  const R& at(int i, int j) const {
    check_upper(i, j);
    return upper_[offset(i, j)];
  }

  /// Signed entry for arbitrary (i, j).
  R entry(int i, int j) const {
    if (i == j) return R{};
    if (i < j) return upper_[offset(i, j)];
    return -upper_[offset(j, i)];
  }

 private:
  void check_upper(int i, int j) const {
    if (i < 0 || j >= n_ || i >= j) throw std::out_of_range("SkewMatrix: need 0 <= i < j < n");
  }
  std::size_t offset(int i, int j) const {
    // row-major packing of the strict upper triangle
    return std::size_t(i) * n_ - std::size_t(i) * (i + 1) / 2 + (j - i - 1);
  }

  int n_;
  std::vector<R> upper_;
};

namespace detail {

inline int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

template <class R>
void matchsum_rec(const SkewMatrix<R>& a, std::vector<int>& remaining, std::vector<int>& perm,
                  R& acc) {
  if (remaining.empty()) {
    R prod(1);
    for (std::size_t i = 0; i + 1 < perm.size(); i += 2) prod = prod * a.at(perm[i], perm[i + 1]);
    if (detail::permutation_sign(perm) < 0)
      acc = acc - prod;
    else
      acc = acc + prod;
    return;
  }
  // Pair the smallest remaining index with every larger one; this walks
  // exactly the permutations with sigma(2i-1) < sigma(2i) and increasing
  // sigma(2i-1), so every factor has row < column.
  int first = remaining.front();
  for (std::size_t k = 1; k < remaining.size(); ++k) {
    int partner = remaining[k];
    std::vector<int> rest;
    rest.reserve(remaining.size() - 2);
    for (std::size_t m = 1; m < remaining.size(); ++m)
      if (m != k) rest.push_back(remaining[m]);
    perm.push_back(first);
    perm.push_back(partner);
    matchsum_rec(a, rest, perm, acc);
    perm.pop_back();
    perm.pop_back();
  }
}

}  // namespace detail

/// Pfaffian as the signed sum over perfect matchings, enumerating the
/// ordered permutations directly. Reference path for cross-validation;
/// O(n!!), bounded to keep accidental misuse cheap.
template <class R>
R pf_matchsum(const SkewMatrix<R>& a, int oracle_bound = 10) {
  int n = a.size();
  if (n % 2 != 0) throw OddSizeError();
  if (n > oracle_bound) throw std::invalid_argument("pf_matchsum: size beyond the oracle bound");
  if (n == 0) return R(1);
  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i;
  std::vector<int> perm;
  R acc{};
  detail::matchsum_rec(a, remaining, perm, acc);
  return acc;
}

/// Pfaffian by expansion along the first remaining row, memoized on the
/// set of live indices. Division-free, so it works over polynomial rings.
template <class R>
R pf_expand(const SkewMatrix<R>& a) {
  int n = a.size();
  if (n % 2 != 0) throw OddSizeError();
  if (n > 63) throw std::invalid_argument("pf_expand: size too large for subset memoization");
  std::unordered_map<std::uint64_t, R> memo;
  auto rec = [&](auto&& self, std::uint64_t mask) -> R {
    if (mask == 0) return R(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int i0 = __builtin_ctzll(mask);
    R acc{};
    int sign = 1;
    for (int j = i0 + 1; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      std::uint64_t sub = mask & ~(1ull << i0) & ~(1ull << j);
      R term = a.at(i0, j) * self(self, sub);
      if (sign < 0)
        acc = acc - term;
      else
        acc = acc + term;
      sign = -sign;
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  return rec(rec, full);
}

/// Exact determinant by cofactor expansion memoized on column subsets
/// (rows are consumed in order). Used for the Pf^2 = det cross-check.
template <class R>
R determinant(const SkewMatrix<R>& a) {
  int n = a.size();
  if (n == 0) return R(1);
  if (n > 30) throw std::invalid_argument("determinant: size too large for subset memoization");
  std::unordered_map<std::uint32_t, R> memo;
  auto rec = [&](auto&& self, std::uint32_t colmask) -> R {
    if (colmask == 0) return R(1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcount(colmask);
    R acc{};
    int sign = 1;
    for (int j = 0; j < n; ++j) {
      if (!(colmask >> j & 1)) continue;
      R e = a.entry(row, j);
      R term = e * self(self, colmask & ~(1u << j));
      if (sign < 0)
        acc = acc - term;
      else
        acc = acc + term;
      sign = -sign;
    }
    return memo.emplace(colmask, std::move(acc)).first->second;
  };
  return rec(rec, n == 32 ? ~0u : (1u << n) - 1);
}

}  // namespace bdkp
