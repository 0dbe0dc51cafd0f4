#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdkp/hirota.hpp"
#include "bdkp/problem.hpp"
#include "bdkp/render.hpp"

#include <sstream>
#include "bdkp/rng.hpp"

using namespace bdkp;

namespace {

MPoly random_poly(SplitMix64& rng, bool with_radical) {
  MPoly p;
  long n = rng.range(1, 6);
  for (long i = 0; i < n; ++i) {
    std::vector<std::pair<VarId, std::uint32_t>> exps;
    for (int j : {1, 3, 5}) {
      std::uint32_t e = std::uint32_t(rng.range(0, 2));
      if (e > 0) exps.emplace_back(rng.range(0, 1) ? VarId::time(j) : VarId::time_primed(j), e);
    }
    Scalar c(random_rational(rng, 5, 6),
             with_radical && rng.range(0, 1) ? random_rational(rng, 3, 4) : Rational(0));
    p += MPoly::term(c, Monomial(std::move(exps)));
  }
  return p;
}

nlohmann::json base_spec() {
  return nlohmann::json::parse(R"({"hierarchy": "bkp", "partition": [2, 1], "c": [["1/2"], []]})");
}

}  // namespace

TEST_CASE("plain rendering round-trips through the parser") {
  CHECK(to_plain(MPoly()) == "0");
  MPoly expected = MPoly::var(VarId::time(1), 3) * Scalar(1, 12) - MPoly::var(VarId::time(3));
  CHECK(to_plain(expected) == "t_1^3/12 - t_3");
  CHECK(parse_poly("t_1^3/12 - t_3") == expected);
  CHECK(parse_poly("1 + 2*t_1 - t'_3/2") ==
        MPoly(1) + MPoly::var(VarId::time(1)) * Scalar(2) -
            MPoly::var(VarId::time_primed(3)) * Scalar(1, 2));
  CHECK(parse_poly("(1/2 + 1/3*sqrt2)*t_1").coeff(Monomial({{VarId::time(1), 1}})) ==
        Scalar(Rational(1, 2), Rational(1, 3)));
  CHECK_THROWS_AS(parse_poly("t_2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t_1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t_1/t_1"), std::invalid_argument);

  SplitMix64 rng(12321);
  for (int iter = 0; iter < 20; ++iter) {
    MPoly p = random_poly(rng, true);
    CHECK(parse_poly(to_plain(p)) == p);
  }

  // coefficients beyond machine integers survive the round trip
  Scalar huge(rational_from_string("123456789012345678901234567890123/7"));
  MPoly big = MPoly::var(VarId::time(1)) * huge + MPoly(Scalar(Rational(1), huge.rat()));
  CHECK(parse_poly(to_plain(big)) == big);
}

TEST_CASE("json polynomial round-trip") {
  SplitMix64 rng(777);
  for (int iter = 0; iter < 10; ++iter) {
    MPoly p = random_poly(rng, true);
    CHECK(poly_from_json(poly_to_json(p)) == p);
  }
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::object()), std::invalid_argument);
}

TEST_CASE("latex rendering") {
  MPoly p = MPoly::var(VarId::time(1), 3) * Scalar(1, 12) - MPoly::var(VarId::time(3));
  CHECK(to_latex(p) == "\\frac{1}{12} t_{1}^{3} - t_{3}");
  CHECK(to_latex(MPoly(Scalar::inv_sqrt2())) == "\\frac{1}{2}\\sqrt{2}");
}

TEST_CASE("spec parsing and validation errors") {
  CHECK_NOTHROW(ProblemSpec::from_json(base_spec()));

  auto bad = base_spec();
  bad["partition"] = {1, 2};
  CHECK_THROWS_WITH_AS(ProblemSpec::from_json(bad), "partition: parts must strictly decrease",
                       SpecError);

  bad = base_spec();
  bad.erase("c");
  CHECK_THROWS_AS(ProblemSpec::from_json(bad), SpecError);

  bad = base_spec();
  bad["generators"] = nlohmann::json::array();
  CHECK_THROWS_AS(ProblemSpec::from_json(bad), SpecError);  // both c and generators

  bad = base_spec();
  bad["b"] = {"1", "2"};
  CHECK_THROWS_AS(ProblemSpec::from_json(bad), SpecError);  // b invalid for bkp

  bad = base_spec();
  bad["unknown_field"] = 1;
  CHECK_THROWS_AS(ProblemSpec::from_json(bad), SpecError);

  bad = base_spec();
  bad["hierarchy"] = "ckp";
  CHECK_THROWS_AS(ProblemSpec::from_json(bad), SpecError);

  bad = base_spec();
  bad["partition"] = {2, 1, 0};
  CHECK_THROWS_AS(ProblemSpec::from_json(bad), SpecError);  // bkp needs positive parts

  bad = base_spec();
  bad["c"] = {{"1/0"}, {}};
  CHECK_THROWS_AS(ProblemSpec::from_json(bad), SpecError);

  auto mdkp = nlohmann::json::parse(
      R"({"hierarchy": "mdkp", "partition": [1, 0], "c": [[], []],
          "b": ["1/2", "0"], "drop_index": 2})");
  auto spec = ProblemSpec::from_json(mdkp);
  CHECK(spec.variant == MdkpVariant::even_drop);
  mdkp["variant"] = "odd_drop";
  CHECK_THROWS_AS(ProblemSpec::from_json(mdkp), SpecError);
  mdkp["variant"] = "even_drop";
  CHECK_NOTHROW(ProblemSpec::from_json(mdkp));
  mdkp["drop_index"] = 5;
  CHECK_THROWS_AS(ProblemSpec::from_json(mdkp), SpecError);

  auto dkp = nlohmann::json{{"hierarchy", "dkp0"}, {"partition", {2, 1, 0}}, {"c", "random"}};
  CHECK_THROWS_AS(ProblemSpec::from_json(dkp), SpecError);  // odd count for dkp0
}

TEST_CASE("build and verify through the command layer") {
  auto spec = ProblemSpec::from_json(base_spec());
  auto built = build_taus(spec, 0);
  REQUIRE(built.taus.size() == 1);
  CHECK(applicable_checks(spec) == std::set<std::string>{"bkp"});
  auto results = run_checks(built, {"bkp"});
  REQUIRE(results.size() == 1);
  CHECK(results[0].pass);

  CHECK_THROWS_AS(run_checks(built, {"fermionic"}), ChecksUnavailableError);
  CHECK_THROWS_AS(run_checks(built, {"mdkp"}), SpecError);
  CHECK_THROWS_AS(run_checks(built, {"nonsense"}), SpecError);

  // seeded random constants reproduce
  auto rand_spec = ProblemSpec::from_json(
      nlohmann::json{{"hierarchy", "bkp"}, {"partition", {3, 2, 1}}, {"c", "random"}});
  auto b1 = build_taus(rand_spec, 7);
  auto b2 = build_taus(rand_spec, 7);
  auto b3 = build_taus(rand_spec, 8);
  CHECK(b1.taus[0].poly == b2.taus[0].poly);
  CHECK(b1.taus[0].poly != b3.taus[0].poly);
  CHECK(run_checks(b1, {"bkp"})[0].pass);

  // generator-form mdkp runs every check, ordering is name-sorted
  auto mdkp = nlohmann::json::parse(
      R"({"hierarchy": "mdkp", "partition": [2, 1],
          "generators": [{"pivot": 2, "coeffs": {"1": "1/2"}},
                         {"pivot": 1, "coeffs": {"0": "-1/3"}}],
          "drop_index": 1})");
  auto mspec = ProblemSpec::from_json(mdkp);
  auto mbuilt = build_taus(mspec, 0);
  auto mres = run_checks(mbuilt, applicable_checks(mspec));
  REQUIRE(mres.size() == 5);
  CHECK(mres[0].name == "annihilator[pair]");
  CHECK(mres[1].name == "bkp[tau0]");
  CHECK(mres[2].name == "bkp[tau1]");
  CHECK(mres[3].name == "fermionic[mdkp]");
  CHECK(mres[4].name == "mdkp[pair]");
  for (const auto& r : mres) CHECK(r.pass);
}

TEST_CASE("failing verification carries a witness") {
  auto built = BuiltTaus{};
  built.spec = ProblemSpec::from_json(base_spec());
  built.taus.push_back(TauPoly{MPoly(1) + MPoly::var(VarId::time(1), 3), TauFamily::bkp,
                               PartitionExt({2, 1}), {}});
  auto results = run_checks(built, {"bkp"});
  REQUIRE(results.size() == 1);
  CHECK(!results[0].pass);
  CHECK(results[0].detail.find("witness") == 0);
}

TEST_CASE("tau rendering formats") {
  auto spec = ProblemSpec::from_json(base_spec());
  auto built = build_taus(spec, 0);
  CHECK(render_taus(built, RenderFormat::plain).find("t_1") != std::string::npos);
  auto j = nlohmann::json::parse(render_taus(built, RenderFormat::json));
  CHECK(j["family"] == "bkp");
  CHECK(j["partition"] == nlohmann::json({2, 1}));
  CHECK(poly_from_json(j) == built.taus[0].poly);

  // rendered json re-enters the verifier unchanged (round-trip)
  CHECK(bkp_residual(poly_from_json(j)).is_zero());
}

namespace {

// strips the wall-clock columns, keeping size/partition/terms/zero-flag
std::string bench_stable_columns(const std::string& table) {
  std::istringstream in(table);
  std::string line, out;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string size, part, terms, cms, vms, zero;
    ls >> size >> part >> terms >> cms >> vms >> zero;
    out += size + " " + part + " " + terms + " " + zero + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("bench output") {
  std::string table = run_bench({4});
  CHECK(table.find("(3,1)") != std::string::npos);
  CHECK(table.find("yes") != std::string::npos);
  // deterministic seeds: identical term counts on re-run
  CHECK(bench_stable_columns(run_bench({4})) == bench_stable_columns(table));

  CHECK_THROWS_AS(run_bench({kMaxBenchSize + 1}), SpecError);
  CHECK_THROWS_AS(run_bench({0}), SpecError);
}
