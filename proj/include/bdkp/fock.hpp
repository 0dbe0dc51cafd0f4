#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bdkp/scalar.hpp"

namespace bdkp {

struct AlgebraMismatchError : std::invalid_argument {
  AlgebraMismatchError() : std::invalid_argument("mixed B/D algebra operands") {}
};
struct OddLengthError : std::invalid_argument {
  OddLengthError() : std::invalid_argument("even operator count required") {}
};
struct MixedParityError : std::invalid_argument {
  MixedParityError() : std::invalid_argument("vector mixes word parities") {}
};
struct ParityError : std::invalid_argument {
  ParityError() : std::invalid_argument("expected (even, odd) parity pair") {}
};
struct WindowTooSmallError : std::invalid_argument {
  WindowTooSmallError() : std::invalid_argument("mode window smaller than state support") {}
};
struct IsotropicAlphaError : std::invalid_argument {
  IsotropicAlphaError() : std::invalid_argument("reflection through isotropic vector") {}
};

/// Neutral fermion algebras: B has integer mode indices (0 allowed),
/// D has half-odd-integer indices. Indices are stored doubled so both
/// stay exact integers: B modes are even, D modes are odd.
enum class Algebra : std::uint8_t { B, D };

inline bool mode_valid(Algebra alg, int two_j) {
  return alg == Algebra::B ? two_j % 2 == 0 : std::abs(two_j) % 2 == 1;
}

/// Element v = sum v_j phi_j of the generating space C^infty.
class CliffordVec {
 public:
  explicit CliffordVec(Algebra alg) : alg_(alg) {}

  Algebra algebra() const { return alg_; }
  const std::map<int, Scalar>& modes() const { return modes_; }
  bool is_zero() const { return modes_.empty(); }

  void add_mode(int two_j, const Scalar& coeff);
  Scalar mode_coeff(int two_j) const;

  CliffordVec operator*(const Scalar& s) const;
  CliffordVec operator+(const CliffordVec& o) const;
  CliffordVec operator-() const { return *this * Scalar(-1); }

 private:
  Algebra alg_;
  std::map<int, Scalar> modes_;  // two_j -> coefficient
};

/// Bilinear form of Eq-level convention: (phi_i, phi_j) = (-1)^i delta_{i,-j}
/// for B and delta_{i,-j} for D.
Scalar mode_form(Algebra alg, int two_i, int two_j);
Scalar bilinear_form(const CliffordVec& v, const CliffordVec& w);

/// -r_alpha(v) = -v + (2 (alpha,v)/(alpha,alpha)) alpha, the conjugation
/// action alpha v alpha^{-1} of a non-isotropic alpha.
CliffordVec reflection_conjugate(const CliffordVec& alpha, const CliffordVec& v);

/// Basis word: doubled mode indices, strictly increasing, all negative.
/// Represents phi_{j_1} ... phi_{j_p} |0> with j_1 < ... < j_p < 0.
using Word = std::vector<int>;

/// Finite linear combination of basis words over a coefficient ring R
/// (Scalar for concrete states, MPoly for symbolically lifted operators).
template <class R>
class FockVec {
 public:
  explicit FockVec(Algebra alg) : alg_(alg) {}

  static FockVec vacuum(Algebra alg) {
    FockVec v(alg);
    v.terms_.emplace(Word{}, R(1));
    return v;
  }

  Algebra algebra() const { return alg_; }
  const std::map<Word, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const R& coeff) {
    if (coeff == R{}) return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second == R{}) terms_.erase(it);
    }
  }

  R vacuum_coeff() const {
    auto it = terms_.find(Word{});
    return it == terms_.end() ? R{} : it->second;
  }

  /// Largest doubled mode magnitude appearing in any word (0 if none).
  int max_mode_abs2() const {
    int m = 0;
    for (const auto& [w, c] : terms_)
      if (!w.empty()) m = std::max(m, -w.front());
    return m;
  }

  /// 0 = all words even length, 1 = all odd, -1 = mixed or empty.
  int pure_parity() const {
    int parity = -1;
    for (const auto& [w, c] : terms_) {
      int p = int(w.size() % 2);
      if (parity == -1)
        parity = p;
      else if (parity != p)
        return -1;
    }
    return parity;
  }

  FockVec operator+(const FockVec& o) const {
    FockVec out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
  }

  FockVec operator*(const R& s) const {
    FockVec out(alg_);
    if (s == R{}) return out;
    for (const auto& [w, c] : terms_) out.add_term(w, c * s);
    return out;
  }

  bool operator==(const FockVec& o) const { return alg_ == o.alg_ && terms_ == o.terms_; }

 private:
  Algebra alg_;
  std::map<Word, R> terms_;
};

/// phi_j applied to a state: negative modes anticommute into sorted
/// position (vanishing on repeats), positive modes contract against the
/// matching word entry and annihilate the vacuum, and phi_0 (B only)
/// passes through to hit phi_0|0> = |0>/sqrt(2).
template <class R>
FockVec<R> apply_mode(int two_j, const FockVec<R>& x) {
  if (!mode_valid(x.algebra(), two_j)) throw std::invalid_argument("mode index parity vs algebra");
  FockVec<R> out(x.algebra());
  for (const auto& [w, c] : x.terms()) {
    if (two_j < 0) {
      std::size_t pos = 0;
      while (pos < w.size() && w[pos] < two_j) ++pos;
      if (pos < w.size() && w[pos] == two_j) continue;  // phi_j^2 = 0 for j != 0
      Word nw;
      nw.reserve(w.size() + 1);
      nw.insert(nw.end(), w.begin(), w.begin() + pos);
      nw.push_back(two_j);
      nw.insert(nw.end(), w.begin() + pos, w.end());
      out.add_term(nw, pos % 2 == 0 ? c : c * Scalar(-1));
    } else if (two_j == 0) {
      // B only: anticommute through the word, then phi_0|0> = |0>/sqrt 2.
      Scalar f = Scalar::inv_sqrt2();
      if (w.size() % 2 == 1) f = -f;
      out.add_term(w, c * f);
    } else {
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != -two_j) continue;
        Scalar f = mode_form(x.algebra(), two_j, w[k]);
        if (k % 2 == 1) f = -f;
        Word nw;
        nw.reserve(w.size() - 1);
        nw.insert(nw.end(), w.begin(), w.begin() + k);
        nw.insert(nw.end(), w.begin() + k + 1, w.end());
        out.add_term(nw, c * f);
        break;  // word modes are distinct
      }
    }
  }
  return out;
}

template <class R>
FockVec<R> apply(const CliffordVec& v, const FockVec<R>& x) {
  if (v.algebra() != x.algebra()) throw AlgebraMismatchError();
  FockVec<R> out(x.algebra());
  for (const auto& [two_j, coeff] : v.modes()) out = out + apply_mode(two_j, x) * R(coeff);
  return out;
}

/// Lifted operators carry ring coefficients per mode; used by the tau
/// oracles where the coefficients are Schur polynomials.
template <class R>
FockVec<R> apply_mode_terms(const std::vector<std::pair<int, R>>& terms, const FockVec<R>& x) {
  FockVec<R> out(x.algebra());
  for (const auto& [two_j, coeff] : terms) {
    if (coeff == R{}) continue;
    out = out + apply_mode(two_j, x) * coeff;
  }
  return out;
}

enum class LeftState { vacuum, phi_half };

/// <0| op_1 ... op_k |0>, or <0| phi_{1/2} op_1 ... op_k |0> for
/// LeftState::phi_half (D only).
Scalar vev(const std::vector<CliffordVec>& ops, LeftState left = LeftState::vacuum);

/// Wick form of the vacuum expectation: Pfaffian of the two-point matrix
/// <0|v_i v_j|0>, i < j. Equals vev() for any even sequence.
Scalar wick_pfaffian_vev(const std::vector<CliffordVec>& ops);

/// Schubert-cell generators in normal form: pivot coefficient 1 on the
/// lowest mode, finitely many corrections.
struct GeneratorB {
  int pivot = 1;                   // v = phi_{-pivot} + sum_{n < pivot} coeff[n] phi_{-n}
  std::map<int, Rational> coeff;   // n may be <= 0 (modes phi_0, phi_{|n|})
};
struct GeneratorD {
  int pivot = 0;                   // v = phi_{-pivot-1/2} + sum_{n < pivot} coeff[n] phi_{-n-1/2}
  std::map<int, Rational> coeff;
};

CliffordVec to_clifford(const GeneratorB& g);
CliffordVec to_clifford(const GeneratorD& g);

/// v_1 v_2 ... v_k |0>. May legitimately be the zero vector.
FockVec<Scalar> generator_state(const std::vector<GeneratorB>& gens);
FockVec<Scalar> generator_state(const std::vector<GeneratorD>& gens);

/// Finite tensor in V (x) V, keyed by word pairs; window2 records the
/// doubled mode truncation that provably captured every nonzero summand.
struct TensorResidual {
  Algebra algebra;
  int window2 = 0;
  std::map<std::pair<Word, Word>, Scalar> terms;

  bool empty() const { return terms.empty(); }
  void add(const Word& a, const Word& b, const Scalar& c);
};

/// S_B(tau (x) tau) - 1/2 tau (x) tau with S_B = sum_j (-1)^j phi_j (x) phi_{-j}.
TensorResidual fermionic_bkp_residual(const FockVec<Scalar>& tau);
/// S_D(tau (x) tau) with S_D = sum_{j half-integer} phi_j (x) phi_{-j}.
TensorResidual fermionic_dkp_residual(const FockVec<Scalar>& tau);
/// S_D(tau0 (x) tau1) - tau1 (x) tau0.
TensorResidual fermionic_mdkp_residual(const FockVec<Scalar>& tau0, const FockVec<Scalar>& tau1);

/// dim((Ann tau0 + Ann tau1) / (Ann tau0 /\ Ann tau1)) with annihilators
/// computed exactly inside the window |2j| <= window2.
int annihilator_quotient_dim(const FockVec<Scalar>& tau0, const FockVec<Scalar>& tau1,
                             int window2);

}  // namespace bdkp
