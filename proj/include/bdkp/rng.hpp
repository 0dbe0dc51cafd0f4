#pragma once

#include <cstdint>

#include "bdkp/scalar.hpp"

namespace bdkp {

/// Deterministic splitmix64 stream; used wherever seed-fixed inputs must
/// reproduce across platforms (std::uniform_* distributions do not).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long range(long lo, long hi) {  // inclusive
    return lo + long(below(std::uint64_t(hi - lo + 1)));
  }
};

/// Random p/q with q <= max_den and |p/q| <= max_abs.
inline Rational random_rational(SplitMix64& rng, long max_abs, long max_den) {
  long q = rng.range(1, max_den);
  long p = rng.range(-max_abs * q, max_abs * q);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace bdkp
