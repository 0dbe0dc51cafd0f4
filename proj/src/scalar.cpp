#include "bdkp/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace bdkp {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Scalar::Scalar(long p, long q) : rat_(p, q), rad_(0) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  rat_.canonicalize();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // (a + b*sqrt2)^-1 = (a - b*sqrt2) / (a^2 - 2 b^2); the norm is nonzero
  // for nonzero elements since sqrt2 is irrational.
  Rational norm = rat_ * rat_ - 2 * rad_ * rad_;
  return Scalar(rat_ / norm, -rad_ / norm);
}

std::string Scalar::str() const {
  if (rad_ == 0) return rational_to_string(rat_);
  std::string radical = rational_to_string(rad_) + "*sqrt2";
  if (rat_ == 0) return radical;
  if (rad_ < 0) return rational_to_string(rat_) + " - " + rational_to_string(Rational(-rad_)) + "*sqrt2";
  return rational_to_string(rat_) + " + " + radical;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace bdkp
