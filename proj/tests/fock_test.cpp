#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdkp/fock.hpp"
#include "bdkp/rng.hpp"

using namespace bdkp;

namespace {

CliffordVec mode(Algebra alg, int two_j, Scalar c = Scalar(1)) {
  CliffordVec v(alg);
  v.add_mode(two_j, c);
  return v;
}

CliffordVec random_vec(SplitMix64& rng, Algebra alg, int max_abs2, int max_modes) {
  CliffordVec v(alg);
  long n = rng.range(1, max_modes);
  for (long i = 0; i < n; ++i) {
    int two_j = int(rng.range(-max_abs2, max_abs2));
    if (!mode_valid(alg, two_j)) two_j += (two_j <= 0 ? 1 : -1);
    if (!mode_valid(alg, two_j)) continue;
    v.add_mode(two_j, Scalar(random_rational(rng, 3, 3)));
  }
  return v;
}

GeneratorB random_gen_b(SplitMix64& rng, int pivot) {
  GeneratorB g;
  g.pivot = pivot;
  for (int n = pivot - 1; n >= -1; --n)
    if (rng.range(0, 1) == 0) g.coeff[n] = random_rational(rng, 2, 3);
  return g;
}

GeneratorD random_gen_d(SplitMix64& rng, int pivot) {
  GeneratorD g;
  g.pivot = pivot;
  for (int n = pivot - 1; n >= -2; --n)
    if (rng.range(0, 1) == 0) g.coeff[n] = random_rational(rng, 2, 3);
  return g;
}

}  // namespace

TEST_CASE("single-mode actions on the vacuum") {
  auto vac_b = FockVec<Scalar>::vacuum(Algebra::B);
  CHECK(apply_mode(2, vac_b).is_zero());  // phi_1 |0> = 0
  auto half = apply_mode(0, vac_b);       // phi_0 |0> = |0>/sqrt2
  CHECK(half.vacuum_coeff() == Scalar::inv_sqrt2());

  // phi_1 (phi_{-1} |0>) = -|0> in V_B
  auto phim1 = apply_mode(-2, vac_b);
  auto back = apply_mode(2, phim1);
  CHECK(back.terms().size() == 1);
  CHECK(back.vacuum_coeff() == Scalar(-1));

  // and +|0> in V_D for the half-integer analogue
  auto vac_d = FockVec<Scalar>::vacuum(Algebra::D);
  CHECK(apply_mode(1, apply_mode(-1, vac_d)).vacuum_coeff() == Scalar(1));

  CHECK_THROWS_AS(apply_mode(1, vac_b), std::invalid_argument);
  CHECK_THROWS_AS(apply_mode(0, vac_d), std::invalid_argument);
}

TEST_CASE("vacuum expectation values") {
  CHECK(vev({mode(Algebra::B, 0), mode(Algebra::B, 0)}) == Scalar(1, 2));
  CHECK(vev({mode(Algebra::D, 1), mode(Algebra::D, -1)}) == Scalar(1));
  CHECK(vev({mode(Algebra::B, 0)}) == Scalar::inv_sqrt2());
  CHECK(vev({}) == Scalar(1));
  // <0|phi_{1/2} phi_{-1/2}|0> via the left phi_half state
  CHECK(vev({mode(Algebra::D, -1)}, LeftState::phi_half) == Scalar(1));
  CHECK_THROWS_AS(vev({mode(Algebra::B, 0), mode(Algebra::D, 1)}), AlgebraMismatchError);
}

TEST_CASE("Clifford relation v w + w v = (v, w)") {
  SplitMix64 rng(314);
  for (Algebra alg : {Algebra::B, Algebra::D}) {
    for (int iter = 0; iter < 10; ++iter) {
      auto v = random_vec(rng, alg, 8, 3);
      auto w = random_vec(rng, alg, 8, 3);
      auto x = FockVec<Scalar>::vacuum(alg);
      x = apply(random_vec(rng, alg, 6, 2), x);
      auto lhs = apply(v, apply(w, x)) + apply(w, apply(v, x));
      auto rhs = x * bilinear_form(v, w);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Wick Pfaffian equals direct evaluation") {
  SplitMix64 rng(777);
  for (Algebra alg : {Algebra::B, Algebra::D}) {
    for (int count : {2, 4, 6}) {
      for (int iter = 0; iter < 4; ++iter) {
        std::vector<CliffordVec> ops;
        for (int i = 0; i < count; ++i) ops.push_back(random_vec(rng, alg, 8, 3));
        CHECK(wick_pfaffian_vev(ops) == vev(ops));
      }
    }
  }
  CHECK(wick_pfaffian_vev({}) == Scalar(1));
  CHECK_THROWS_AS(wick_pfaffian_vev({mode(Algebra::B, 0)}), OddLengthError);
}

TEST_CASE("phi_0 padding scales the expectation by 1/sqrt2") {
  SplitMix64 rng(99);
  for (int iter = 0; iter < 6; ++iter) {
    std::vector<CliffordVec> ops;
    long n = 1 + 2 * rng.range(0, 2);
    for (long i = 0; i < n; ++i) ops.push_back(random_vec(rng, Algebra::B, 6, 3));
    auto padded = ops;
    padded.push_back(mode(Algebra::B, 0));
    CHECK(vev(padded) == Scalar::inv_sqrt2() * vev(ops));
  }
}

TEST_CASE("reflection conjugation") {
  // v orthogonal to alpha reflects to -v
  auto alpha = mode(Algebra::B, -2) + mode(Algebra::B, 2, Scalar(1));
  CHECK(bilinear_form(alpha, alpha) == Scalar(-2));
  auto v = mode(Algebra::B, -4);
  auto r = reflection_conjugate(alpha, v);
  CHECK(r.mode_coeff(-4) == Scalar(-1));

  // alpha itself is fixed: alpha alpha alpha^{-1} = -r_alpha(alpha) = alpha
  auto fixed = reflection_conjugate(alpha, alpha);
  CHECK(fixed.mode_coeff(-2) == Scalar(1));
  CHECK(fixed.mode_coeff(2) == Scalar(1));

  CHECK_THROWS_AS(reflection_conjugate(mode(Algebra::B, -2), v), IsotropicAlphaError);

  // brute-force agreement: alpha (v (alpha^{-1} x)) = reflection_conjugate(alpha, v) x
  SplitMix64 rng(123);
  for (Algebra alg : {Algebra::B, Algebra::D}) {
    for (int iter = 0; iter < 8; ++iter) {
      CliffordVec a = random_vec(rng, alg, 6, 3);
      if (bilinear_form(a, a).is_zero()) continue;
      CliffordVec w = random_vec(rng, alg, 6, 3);
      auto x = apply(random_vec(rng, alg, 4, 2), FockVec<Scalar>::vacuum(alg));
      CliffordVec a_inv = a * (Scalar(2) * bilinear_form(a, a).inverse());
      auto lhs = apply(a, apply(w, apply(a_inv, x)));
      auto rhs = apply(reflection_conjugate(a, w), x);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("generator states") {
  GeneratorB g1{1, {}};
  auto s1 = generator_state(std::vector<GeneratorB>{g1});
  CHECK(s1.terms().size() == 1);
  CHECK(s1.terms().begin()->first == Word{-2});

  GeneratorB g2{2, {}};
  auto s21 = generator_state(std::vector<GeneratorB>{g2, g1});
  CHECK(s21.terms().size() == 1);
  CHECK(s21.terms().begin()->first == Word{-4, -2});
  CHECK(s21.terms().begin()->second == Scalar(1));

  // isotropic generator repeated annihilates
  GeneratorB iso{2, {{1, Rational(3, 2)}}};
  auto zero = generator_state(std::vector<GeneratorB>{iso, iso});
  CHECK(zero.is_zero());

  // non-isotropic square leaves (v,v)/2 |0>: generic handling
  GeneratorB with_zero_mode{1, {{0, Rational(3)}}};
  auto sq = generator_state(std::vector<GeneratorB>{with_zero_mode, with_zero_mode});
  CHECK(sq.vacuum_coeff() == Scalar(9, 2));

  CHECK_THROWS_AS(to_clifford(GeneratorB{0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(to_clifford(GeneratorB{2, {{2, Rational(1)}}}), std::invalid_argument);
  CHECK_THROWS_AS(to_clifford(GeneratorD{-1, {}}), std::invalid_argument);
}

TEST_CASE("fermionic BKP residual") {
  auto vac = FockVec<Scalar>::vacuum(Algebra::B);
  CHECK(fermionic_bkp_residual(vac).empty());

  SplitMix64 rng(2718);
  for (int iter = 0; iter < 8; ++iter) {
    std::vector<GeneratorB> gens{random_gen_b(rng, int(rng.range(3, 5))),
                                 random_gen_b(rng, int(rng.range(1, 2)))};
    auto tau = generator_state(gens);
    CHECK(fermionic_bkp_residual(tau).empty());
  }

  // |0> + phi_{-4} phi_{-3} phi_{-2} phi_{-1} |0> misses the quadratic terms
  auto bad = FockVec<Scalar>::vacuum(Algebra::B);
  bad.add_term(Word{-8, -6, -4, -2}, Scalar(1));
  CHECK(!fermionic_bkp_residual(bad).empty());
}

TEST_CASE("fermionic DKP residual") {
  auto vac = FockVec<Scalar>::vacuum(Algebra::D);
  CHECK(fermionic_dkp_residual(vac).empty());
  CHECK(fermionic_dkp_residual(apply_mode(-1, vac)).empty());

  SplitMix64 rng(555);
  for (int iter = 0; iter < 8; ++iter) {
    std::vector<GeneratorD> gens{random_gen_d(rng, int(rng.range(2, 4))),
                                 random_gen_d(rng, int(rng.range(0, 1)))};
    auto tau = generator_state(gens);
    CHECK(fermionic_dkp_residual(tau).empty());
  }

  auto mixed = FockVec<Scalar>::vacuum(Algebra::D);
  mixed.add_term(Word{-1}, Scalar(1));
  CHECK_THROWS_AS(fermionic_dkp_residual(mixed), MixedParityError);
}

TEST_CASE("fermionic MDKP residual and annihilator dimension") {
  auto vac = FockVec<Scalar>::vacuum(Algebra::D);
  auto one = apply_mode(-1, vac);  // phi_{-1/2}|0>

  CHECK(fermionic_mdkp_residual(vac, one).empty());
  CHECK(annihilator_quotient_dim(vac, one, 3) == 2);
  CHECK(annihilator_quotient_dim(vac, vac, 3) == 0);
  CHECK_THROWS_AS(fermionic_mdkp_residual(one, vac), ParityError);

  auto far = apply_mode(-9, vac);
  CHECK_THROWS_AS(annihilator_quotient_dim(vac, far, 3), WindowTooSmallError);

  // shared generators: tau1 = v1 v2 v3 |0>, tau0 = v1 v2 |0> (drop the last)
  SplitMix64 rng(31337);
  for (int iter = 0; iter < 6; ++iter) {
    std::vector<GeneratorD> gens{random_gen_d(rng, 4), random_gen_d(rng, 2),
                                 random_gen_d(rng, int(rng.range(0, 1)))};
    auto tau1 = generator_state(gens);
    auto tau0 = generator_state(std::vector<GeneratorD>{gens[0], gens[1]});
    REQUIRE(!tau1.is_zero());
    REQUIRE(!tau0.is_zero());
    bool residual_empty = fermionic_mdkp_residual(tau0, tau1).empty();
    int window2 = std::max(tau0.max_mode_abs2(), tau1.max_mode_abs2()) + 2;
    int dim = annihilator_quotient_dim(tau0, tau1, window2);
    CHECK(residual_empty);
    CHECK(dim == 2);
  }

  // unrelated mode sets: both sides of the equivalence must flip together
  for (int iter = 0; iter < 6; ++iter) {
    std::vector<GeneratorD> even_gens{random_gen_d(rng, 3), random_gen_d(rng, 1)};
    std::vector<GeneratorD> odd_gens{random_gen_d(rng, 6), random_gen_d(rng, 5),
                                     random_gen_d(rng, 4)};
    auto tau0 = generator_state(even_gens);
    auto tau1 = generator_state(odd_gens);
    REQUIRE(!tau0.is_zero());
    REQUIRE(!tau1.is_zero());
    bool residual_empty = fermionic_mdkp_residual(tau0, tau1).empty();
    int window2 = std::max(tau0.max_mode_abs2(), tau1.max_mode_abs2()) + 2;
    bool dim_is_two = annihilator_quotient_dim(tau0, tau1, window2) == 2;
    CHECK(residual_empty == dim_is_two);
  }
}
