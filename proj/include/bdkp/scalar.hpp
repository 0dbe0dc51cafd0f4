#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace bdkp {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a reduced rational with positive denominator.
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

/// Element of the ring Q(sqrt 2), stored as rat + rad*sqrt(2) with both
/// parts reduced rationals. Pure rationals keep rad == 0, so they live in
/// the same ring as radical values.
class Scalar {
 public:
  Scalar() : rat_(0), rad_(0) {}
  Scalar(long n) : rat_(n), rad_(0) {}  // NOLINT: implicit by design
  Scalar(const Rational& a) : rat_(a), rad_(0) {}
  Scalar(Rational a, Rational b) : rat_(std::move(a)), rad_(std::move(b)) {}
  Scalar(long p, long q);

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }
  static Scalar inv_sqrt2() { return Scalar(Rational(0), Rational(1, 2)); }

  const Rational& rat() const { return rat_; }
  const Rational& rad() const { return rad_; }

  bool is_zero() const { return rat_ == 0 && rad_ == 0; }
  bool is_one() const { return rat_ == 1 && rad_ == 0; }
  bool is_rational() const { return rad_ == 0; }

  Scalar operator-() const { return Scalar(-rat_, -rad_); }
  Scalar operator+(const Scalar& o) const { return Scalar(rat_ + o.rat_, rad_ + o.rad_); }
  Scalar operator-(const Scalar& o) const { return Scalar(rat_ - o.rat_, rad_ - o.rad_); }
  Scalar operator*(const Scalar& o) const {
    return Scalar(rat_ * o.rat_ + 2 * rad_ * o.rad_, rat_ * o.rad_ + rad_ * o.rat_);
  }
  Scalar& operator+=(const Scalar& o) {
    rat_ += o.rat_;
    rad_ += o.rad_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    rat_ -= o.rat_;
    rad_ -= o.rad_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool operator==(const Scalar& o) const { return rat_ == o.rat_ && rad_ == o.rad_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "a", "b*sqrt2" or "a + b*sqrt2" with rationals as p/q.
  std::string str() const;

 private:
  Rational rat_;
  Rational rad_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bdkp
