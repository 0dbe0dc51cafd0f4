#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bdkp/scalar.hpp"

namespace bdkp {

/// Variables of the polynomial ring. Time variables t_j and their primed
/// copies t'_j exist only for odd j >= 1; primed copies carry the second
/// tensor factor of the bilinear identities. Aux variables are free slots
/// used by tests that need symbolic constants.
enum class VarKind : std::uint8_t { time = 0, time_primed = 1, aux = 2 };

struct VarId {
  VarKind kind;
  std::uint32_t index;

  static VarId time(std::uint32_t j);
  static VarId time_primed(std::uint32_t j);
  static VarId aux(std::uint32_t i);

  std::uint64_t key() const { return (std::uint64_t(index) << 2) | std::uint64_t(kind); }
  /// Weighted-degree weight: j for t_j and t'_j, 0 for aux slots.
  long weight() const { return kind == VarKind::aux ? 0 : long(index); }

  bool operator==(const VarId& o) const { return kind == o.kind && index == o.index; }
  bool operator<(const VarId& o) const { return key() < o.key(); }

  std::string name() const;
};

/// Exponent vector: sorted (VarId, exponent) pairs, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<VarId, std::uint32_t>> exps);

  const std::vector<std::pair<VarId, std::uint32_t>>& exps() const { return exps_; }
  bool empty() const { return exps_.empty(); }
  long weighted_degree() const;
  std::uint32_t exponent(const VarId& v) const;

  Monomial operator*(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator<(const Monomial& o) const;

 private:
  std::vector<std::pair<VarId, std::uint32_t>> exps_;
};

/// Sparse multivariate polynomial over Scalar, canonical form: no zero
/// coefficients stored. All operations are pure; values are cheap to copy
/// relative to the arithmetic done on them.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long n) { *this = MPoly(Scalar(n)); }  // NOLINT: implicit by design
  MPoly(const Scalar& c);                      // NOLINT: implicit by design

  static MPoly var(VarId v, std::uint32_t exp = 1);
  static MPoly term(const Scalar& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  Scalar coeff(const Monomial& m) const;
  Scalar constant_term() const { return coeff(Monomial()); }
  /// The constant value of a constant polynomial; throws if variables remain.
  Scalar as_constant() const;

  /// Max over terms of the weighted degree; -1 for the zero polynomial.
  long weighted_degree() const;
  bool is_weighted_homogeneous(long degree) const;

  void add_term(const Monomial& m, const Scalar& c);

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Scalar& c) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Scalar& c) { return *this = *this * c; }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Replaces each bound variable by the given polynomial (constants included).
  MPoly substitute(const std::map<VarId, MPoly>& bindings) const;
  /// Substitutes scalars for variables; all variables must be bound.
  Scalar eval(const std::map<VarId, Scalar>& bindings) const;

  /// t_j -> t'_j on every term.
  MPoly to_primed() const;
  bool has_primed_vars() const;

 private:
  std::map<Monomial, Scalar> terms_;
};

inline MPoly operator*(const Scalar& c, const MPoly& p) { return p * c; }

}  // namespace bdkp
