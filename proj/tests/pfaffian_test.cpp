#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdkp/mpoly.hpp"
#include "bdkp/pfaffian.hpp"
#include "bdkp/rng.hpp"

using namespace bdkp;

namespace {

SkewMatrix<Scalar> random_skew(SplitMix64& rng, int n) {
  SkewMatrix<Scalar> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.at(i, j) = Scalar(random_rational(rng, 4, 3));
  return a;
}

}  // namespace

TEST_CASE("small closed forms") {
  SkewMatrix<Scalar> a2(2);
  a2.at(0, 1) = Scalar(5, 3);
  CHECK(pf_matchsum(a2) == Scalar(5, 3));
  CHECK(pf_expand(a2) == Scalar(5, 3));
  CHECK(determinant(a2) == Scalar(25, 9));

  // n = 4: a12 a34 - a13 a24 + a14 a23
  SkewMatrix<Scalar> a4(4);
  Scalar v[4][4];
  SplitMix64 rng(5);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      v[i][j] = Scalar(random_rational(rng, 3, 2));
      a4.at(i, j) = v[i][j];
    }
  Scalar expected = v[0][1] * v[2][3] - v[0][2] * v[1][3] + v[0][3] * v[1][2];
  CHECK(pf_matchsum(a4) == expected);
  CHECK(pf_expand(a4) == expected);
}

TEST_CASE("odd size raises, zero matrix vanishes") {
  SkewMatrix<Scalar> odd(3);
  CHECK_THROWS_AS(pf_matchsum(odd), OddSizeError);
  CHECK_THROWS_AS(pf_expand(odd), OddSizeError);
  CHECK(determinant(odd).is_zero());  // det of odd skew matrix

  SkewMatrix<Scalar> zero(6);
  CHECK(pf_expand(zero).is_zero());
  CHECK(pf_matchsum(zero).is_zero());
}

TEST_CASE("empty matrix normalizes to 1") {
  SkewMatrix<Scalar> empty(0);
  CHECK(pf_expand(empty) == Scalar(1));
  CHECK(pf_matchsum(empty) == Scalar(1));
}

TEST_CASE("block diagonal factorizes") {
  SkewMatrix<Scalar> a(6);
  Scalar b1(2), b2(1, 3), b3(-5, 2);
  a.at(0, 1) = b1;
  a.at(2, 3) = b2;
  a.at(4, 5) = b3;
  CHECK(pf_expand(a) == b1 * b2 * b3);
}

TEST_CASE("expand equals matchsum and squares to the determinant") {
  SplitMix64 rng(42);
  for (int n = 2; n <= 8; n += 2) {
    for (int iter = 0; iter < 3; ++iter) {
      auto a = random_skew(rng, n);
      Scalar pf = pf_expand(a);
      CHECK(pf == pf_matchsum(a));
      CHECK(pf * pf == determinant(a));
    }
  }
}

TEST_CASE("swapping two indices negates the Pfaffian") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 4; ++iter) {
    int n = 6;
    auto a = random_skew(rng, n);
    int i = int(rng.range(0, n - 1));
    int j = int(rng.range(0, n - 1));
    if (i == j) continue;
    // rebuild with rows/columns i and j exchanged
    SkewMatrix<Scalar> b(n);
    auto swapped = [&](int k) { return k == i ? j : (k == j ? i : k); };
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) b.at(r, c) = a.entry(swapped(r), swapped(c));
    CHECK(pf_expand(b) == -pf_expand(a));
  }
}

TEST_CASE("polynomial entries stay exact") {
  // 4x4 with entries t_1^i keeps every route in the polynomial ring.
  SkewMatrix<MPoly> a(4);
  MPoly t1 = MPoly::var(VarId::time(1));
  a.at(0, 1) = t1;
  a.at(0, 2) = t1 * t1;
  a.at(0, 3) = MPoly(1);
  a.at(1, 2) = t1 * Scalar(1, 2);
  a.at(1, 3) = t1 * t1 * Scalar(3, 1);
  a.at(2, 3) = t1 + MPoly(1);
  MPoly pf = pf_expand(a);
  CHECK(pf == pf_matchsum(a));
  CHECK(pf * pf == determinant(a));
}
