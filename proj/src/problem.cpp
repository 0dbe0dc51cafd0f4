#include "bdkp/problem.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "bdkp/hirota.hpp"
#include "bdkp/render.hpp"
#include "bdkp/rng.hpp"

namespace bdkp {

std::string hierarchy_name(Hierarchy h) {
  switch (h) {
    case Hierarchy::bkp:
      return "bkp";
    case Hierarchy::dkp0:
      return "dkp0";
    case Hierarchy::dkp1:
      return "dkp1";
    case Hierarchy::mdkp:
      return "mdkp";
  }
  return "?";
}

namespace {

Rational json_rational(const nlohmann::json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
  throw SpecError(path, "expected a rational as \"p/q\" string or integer");
}

ShiftConstants parse_constants(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw SpecError(path, "expected an array of rational arrays");
  ShiftConstants out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw SpecError(row_path, "expected an array of rationals");
    std::vector<Scalar> c;
    c.reserve(row.size());
    for (std::size_t k = 0; k < row.size(); ++k)
      c.emplace_back(json_rational(row[k], row_path + "[" + std::to_string(k) + "]"));
    out.push_back(std::move(c));
  }
  return out;
}

template <class G>
std::vector<G> parse_generators(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw SpecError(path, "expected an array of generators");
  std::vector<G> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& g = j[i];
    std::string gpath = path + "[" + std::to_string(i) + "]";
    if (!g.is_object() || !g.contains("pivot"))
      throw SpecError(gpath, "expected an object with a pivot field");
    G gen;
    gen.pivot = g.at("pivot").get<int>();
    if (g.contains("coeffs")) {
      if (!g["coeffs"].is_object()) throw SpecError(gpath + ".coeffs", "expected an object");
      for (const auto& [key, value] : g["coeffs"].items()) {
        int n = 0;
        try {
          n = std::stoi(key);
        } catch (const std::exception&) {
          throw SpecError(gpath + ".coeffs", "keys must be integers, got \"" + key + "\"");
        }
        gen.coeff[n] = json_rational(value, gpath + ".coeffs[\"" + key + "\"]");
      }
    }
    out.push_back(std::move(gen));
  }
  return out;
}

}  // namespace

ProblemSpec ProblemSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("$", "spec must be a JSON object");
  static const std::set<std::string> known{"hierarchy", "partition", "c",  "b",       "generators",
                                           "drop_index", "a0",        "a1", "variant"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw SpecError(key, "unknown field");

  ProblemSpec spec;
  if (!j.contains("hierarchy")) throw SpecError("hierarchy", "required");
  std::string h = j["hierarchy"].get<std::string>();
  if (h == "bkp")
    spec.hierarchy = Hierarchy::bkp;
  else if (h == "dkp0")
    spec.hierarchy = Hierarchy::dkp0;
  else if (h == "dkp1")
    spec.hierarchy = Hierarchy::dkp1;
  else if (h == "mdkp")
    spec.hierarchy = Hierarchy::mdkp;
  else
    throw SpecError("hierarchy", "expected bkp, dkp0, dkp1 or mdkp");

  if (!j.contains("partition")) throw SpecError("partition", "required");
  if (!j["partition"].is_array()) throw SpecError("partition", "expected an array of integers");
  for (const auto& p : j["partition"]) spec.partition.push_back(p.get<int>());
  for (std::size_t i = 0; i < spec.partition.size(); ++i) {
    if (spec.partition[i] < 0) throw SpecError("partition", "parts must be nonnegative");
    if (i > 0 && spec.partition[i - 1] <= spec.partition[i])
      throw SpecError("partition", "parts must strictly decrease");
  }

  bool has_c = j.contains("c");
  bool has_gens = j.contains("generators");
  if (has_c == has_gens)
    throw SpecError("c", "exactly one of c or generators must be present");

  if (has_c) {
    if (j["c"].is_string() && j["c"].get<std::string>() == "random")
      spec.random_c = true;
    else
      spec.c = parse_constants(j["c"], "c");
    if (spec.c && spec.c->size() != spec.partition.size())
      throw SpecError("c", "need one constant sequence per part");
  } else {
    if (spec.hierarchy == Hierarchy::bkp)
      spec.generators_b = parse_generators<GeneratorB>(j["generators"], "generators");
    else
      spec.generators_d = parse_generators<GeneratorD>(j["generators"], "generators");
    for (std::size_t i = 0; i < spec.partition.size(); ++i) {
      int pivot = spec.generators_b ? (*spec.generators_b)[i].pivot : (*spec.generators_d)[i].pivot;
      if (pivot != spec.partition[i])
        throw SpecError("generators[" + std::to_string(i) + "].pivot",
                        "pivot must match the partition part");
    }
    std::size_t count =
        spec.generators_b ? spec.generators_b->size() : spec.generators_d->size();
    if (count != spec.partition.size())
      throw SpecError("generators", "need one generator per part");
  }

  if (j.contains("b")) {
    if (spec.hierarchy == Hierarchy::bkp) throw SpecError("b", "only valid for DKP hierarchies");
    if (has_gens) throw SpecError("b", "b scalars come from the generators");
    if (!j["b"].is_array()) throw SpecError("b", "expected an array of rationals");
    std::vector<Scalar> b;
    for (std::size_t i = 0; i < j["b"].size(); ++i)
      b.emplace_back(json_rational(j["b"][i], "b[" + std::to_string(i) + "]"));
    if (b.size() != spec.partition.size()) throw SpecError("b", "need one scalar per part");
    spec.b = std::move(b);
  }

  if (spec.hierarchy == Hierarchy::mdkp) {
    if (!j.contains("drop_index")) throw SpecError("drop_index", "required for mdkp");
    spec.drop_index = j["drop_index"].get<int>();
    if (spec.drop_index < 1 || spec.drop_index > int(spec.partition.size()))
      throw SpecError("drop_index", "outside the partition");
    if (j.contains("a0")) spec.a0 = Scalar(json_rational(j["a0"], "a0"));
    if (j.contains("a1")) spec.a1 = Scalar(json_rational(j["a1"], "a1"));
    MdkpVariant inferred =
        spec.partition.size() % 2 == 1 ? MdkpVariant::odd_drop : MdkpVariant::even_drop;
    if (j.contains("variant")) {
      std::string v = j["variant"].get<std::string>();
      if (v == "odd_drop")
        spec.variant = MdkpVariant::odd_drop;
      else if (v == "even_drop")
        spec.variant = MdkpVariant::even_drop;
      else
        throw SpecError("variant", "expected odd_drop or even_drop");
      if (spec.variant != inferred)
        throw SpecError("variant", "does not match the partition parity");
    } else {
      spec.variant = inferred;
    }
  } else {
    for (const char* f : {"drop_index", "a0", "a1", "variant"})
      if (j.contains(f)) throw SpecError(f, "only valid for mdkp");
  }

  if (spec.hierarchy == Hierarchy::dkp0 && spec.partition.size() % 2 != 0)
    throw SpecError("partition", "dkp0 needs an even part count");
  if (spec.hierarchy == Hierarchy::dkp1 && spec.partition.size() % 2 != 1)
    throw SpecError("partition", "dkp1 needs an odd part count");
  if (spec.hierarchy == Hierarchy::bkp) {
    if (!spec.partition.empty() && spec.partition.back() == 0)
      throw SpecError("partition", "bkp partitions must have positive parts");
  }
  return spec;
}

namespace {

DkpParams resolve_params(const ProblemSpec& spec, std::uint64_t seed) {
  DkpParams params;
  params.partition = PartitionExt(spec.partition);
  int order = params.partition.empty()
                  ? 0
                  : params.partition.part(0) +
                        (params.partition.size() > 1 ? params.partition.part(1) : 0);
  if (spec.generators_b) {
    params.c = generators_to_constants(*spec.generators_b).second;
    params.b.assign(params.partition.size(), Scalar());
  } else if (spec.generators_d) {
    params = generator_d_to_params(*spec.generators_d);
  } else if (spec.random_c) {
    SplitMix64 rng(seed);
    for (int i = 0; i < params.partition.size(); ++i) {
      std::vector<Scalar> row;
      row.reserve(order);
      for (int k = 0; k < order; ++k) row.emplace_back(random_rational(rng, 3, 4));
      params.c.push_back(std::move(row));
    }
    if (spec.hierarchy != Hierarchy::bkp && !spec.b)
      for (int i = 0; i < params.partition.size(); ++i)
        params.b.emplace_back(random_rational(rng, 3, 4));
    else
      params.b.assign(params.partition.size(), Scalar());
  } else {
    params.c = *spec.c;
    params.b.assign(params.partition.size(), Scalar());
  }
  if (spec.b) params.b = *spec.b;
  if (int(params.b.size()) != params.partition.size())
    params.b.assign(params.partition.size(), Scalar());
  return params;
}

}  // namespace

BuiltTaus build_taus(const ProblemSpec& spec, std::uint64_t seed) {
  BuiltTaus out;
  out.spec = spec;
  out.params = resolve_params(spec, seed);
  try {
    switch (spec.hierarchy) {
      case Hierarchy::bkp:
        out.taus.push_back(tau_bkp(out.params.partition, out.params.c));
        break;
      case Hierarchy::dkp0:
        out.taus.push_back(tau_dkp_even(out.params));
        break;
      case Hierarchy::dkp1:
        out.taus.push_back(tau_dkp_odd(out.params));
        break;
      case Hierarchy::mdkp: {
        auto [tau0, tau1] = mdkp_pair(out.params, spec.drop_index, spec.a0, spec.a1, spec.variant);
        out.taus.push_back(std::move(tau0));
        out.taus.push_back(std::move(tau1));
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw SpecError("partition", e.what());
  } catch (const std::out_of_range& e) {
    throw SpecError("drop_index", e.what());
  }
  return out;
}

std::set<std::string> applicable_checks(const ProblemSpec& spec) {
  std::set<std::string> checks{"bkp"};
  if (spec.hierarchy == Hierarchy::mdkp) checks.insert("mdkp");
  if (spec.has_generators()) {
    checks.insert("fermionic");
    if (spec.hierarchy == Hierarchy::mdkp) checks.insert("annihilator");
  }
  return checks;
}

namespace {

std::string witness(const MPoly& residual) {
  const auto& [m, c] = *residual.terms().begin();
  return "witness " + to_plain(MPoly::term(c, m));
}

void check_bkp(const BuiltTaus& built, std::vector<CheckResult>& out) {
  bool pair = built.taus.size() > 1;
  for (std::size_t i = 0; i < built.taus.size(); ++i) {
    std::string name = pair ? "bkp[tau" + std::to_string(i) + "]" : "bkp[tau]";
    const MPoly& poly = built.taus[i].poly;
    if (poly.is_zero()) {
      out.push_back({name, false, "zero tau-function"});
      continue;
    }
    MPoly r = bkp_residual(poly);
    out.push_back({name, r.is_zero(), r.is_zero() ? "" : witness(r)});
  }
}

void check_mdkp(const BuiltTaus& built, std::vector<CheckResult>& out) {
  if (built.taus.size() != 2) throw SpecError("checks", "mdkp check needs an mdkp spec");
  if (built.taus[0].poly.is_zero() || built.taus[1].poly.is_zero()) {
    out.push_back({"mdkp[pair]", false, "nonzero pair required"});
    return;
  }
  MPoly r = mdkp_residual(built.taus[0].poly, built.taus[1].poly);
  out.push_back({"mdkp[pair]", r.is_zero(), r.is_zero() ? "" : witness(r)});
}

std::string tensor_witness(const TensorResidual& res) {
  const auto& [words, c] = *res.terms.begin();
  auto word_str = [&](const Word& w) {
    std::string s = "phi[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ",";
      s += res.algebra == Algebra::B ? std::to_string(w[i] / 2)
                                     : std::to_string(w[i]) + "/2";
    }
    return s + "]";
  };
  return "witness " + c.str() + " * " + word_str(words.first) + " (x) " + word_str(words.second);
}

void check_fermionic(const BuiltTaus& built, std::vector<CheckResult>& out) {
  const ProblemSpec& spec = built.spec;
  if (!spec.has_generators())
    throw ChecksUnavailableError("fermionic checks need generator-form input");
  if (spec.hierarchy == Hierarchy::bkp) {
    auto state = generator_state(*spec.generators_b);
    auto res = fermionic_bkp_residual(state);
    out.push_back({"fermionic[bkp]", res.empty(), res.empty() ? "" : tensor_witness(res)});
    return;
  }
  if (spec.hierarchy == Hierarchy::mdkp) {
    auto gens1 = *spec.generators_d;
    auto gens_dropped = gens1;
    gens_dropped.erase(gens_dropped.begin() + (spec.drop_index - 1));
    const auto& gens_odd = gens1.size() % 2 == 1 ? gens1 : gens_dropped;
    const auto& gens_even = gens1.size() % 2 == 1 ? gens_dropped : gens1;
    auto tau0 = generator_state(gens_even) * spec.a0;
    auto tau1 = generator_state(gens_odd) * spec.a1;
    if (tau0.is_zero() || tau1.is_zero()) {
      out.push_back({"fermionic[mdkp]", false, "nonzero pair required"});
      return;
    }
    auto res = fermionic_mdkp_residual(tau0, tau1);
    out.push_back({"fermionic[mdkp]", res.empty(), res.empty() ? "" : tensor_witness(res)});
    return;
  }
  auto state = generator_state(*spec.generators_d);
  if (state.is_zero()) {
    out.push_back({"fermionic[dkp]", true, "zero vector"});
    return;
  }
  auto res = fermionic_dkp_residual(state);
  out.push_back({"fermionic[dkp]", res.empty(), res.empty() ? "" : tensor_witness(res)});
}

void check_annihilator(const BuiltTaus& built, std::vector<CheckResult>& out) {
  const ProblemSpec& spec = built.spec;
  if (!spec.has_generators() || spec.hierarchy != Hierarchy::mdkp)
    throw ChecksUnavailableError("annihilator check needs an mdkp spec with generators");
  auto gens1 = *spec.generators_d;
  auto gens_dropped = gens1;
  gens_dropped.erase(gens_dropped.begin() + (spec.drop_index - 1));
  const auto& gens_odd = gens1.size() % 2 == 1 ? gens1 : gens_dropped;
  const auto& gens_even = gens1.size() % 2 == 1 ? gens_dropped : gens1;
  auto tau0 = generator_state(gens_even);
  auto tau1 = generator_state(gens_odd);
  if (tau0.is_zero() || tau1.is_zero()) {
    out.push_back({"annihilator[pair]", false, "nonzero pair required"});
    return;
  }
  int window2 = std::max(tau0.max_mode_abs2(), tau1.max_mode_abs2()) + 2;
  int dim = annihilator_quotient_dim(tau0, tau1, window2);
  out.push_back({"annihilator[pair]", dim == 2, "quotient dim " + std::to_string(dim)});
}

}  // namespace

std::vector<CheckResult> run_checks(const BuiltTaus& built, const std::set<std::string>& checks) {
  for (const auto& c : checks)
    if (c != "bkp" && c != "mdkp" && c != "fermionic" && c != "annihilator")
      throw SpecError("checks", "unknown check \"" + c + "\"");
  std::vector<CheckResult> out;
  // std::set iterates sorted, and per-check instances are emitted in id
  // order, so the report ordering is deterministic.
  for (const auto& c : checks) {
    if (c == "annihilator") check_annihilator(built, out);
    if (c == "bkp") check_bkp(built, out);
    if (c == "fermionic") check_fermionic(built, out);
    if (c == "mdkp") check_mdkp(built, out);
  }
  return out;
}

std::string render_taus(const BuiltTaus& built, RenderFormat format) {
  auto render_one = [&](const TauPoly& t) -> std::string {
    switch (format) {
      case RenderFormat::plain:
        return to_plain(t.poly);
      case RenderFormat::latex:
        return to_latex(t.poly);
      case RenderFormat::json:
        return "";  // handled below
    }
    return "";
  };
  if (format == RenderFormat::json) {
    nlohmann::json out;
    if (built.taus.size() == 1) {
      out = poly_to_json(built.taus[0].poly);
      out["family"] = hierarchy_name(built.spec.hierarchy);
      out["partition"] = built.spec.partition;
    } else {
      out["family"] = "mdkp";
      out["partition"] = built.spec.partition;
      out["tau0"] = poly_to_json(built.taus[0].poly);
      out["tau1"] = poly_to_json(built.taus[1].poly);
    }
    return out.dump(2);
  }
  if (built.taus.size() == 1) return render_one(built.taus[0]);
  return "tau0: " + render_one(built.taus[0]) + "\ntau1: " + render_one(built.taus[1]);
}

std::string run_bench(const std::vector<int>& sizes) {
  for (int s : sizes)
    if (s < 1 || s > kMaxBenchSize)
      throw SpecError("sizes", "size " + std::to_string(s) + " outside 1.." +
                                   std::to_string(kMaxBenchSize));
  std::ostringstream out;
  out << "size  partition        terms  construct_ms  verify_ms  residual_zero\n";
  for (int s : sizes) {
    // staircase-ish deterministic partition of weight s
    std::vector<int> parts;
    int k = 1;
    while ((k + 1) * (k + 2) / 2 <= s) ++k;
    for (int p = k; p >= 1; --p) parts.push_back(p);
    parts[0] += s - k * (k + 1) / 2;
    PartitionExt lambda(parts);

    SplitMix64 rng(0x5eedull + std::uint64_t(s));
    int order = lambda.part(0) + (lambda.size() > 1 ? lambda.part(1) : 0);
    ShiftConstants c;
    for (int i = 0; i < lambda.size(); ++i) {
      std::vector<Scalar> row;
      for (int j = 0; j < order; ++j) row.emplace_back(random_rational(rng, 3, 4));
      c.push_back(std::move(row));
    }

    auto t0 = std::chrono::steady_clock::now();
    TauPoly tau = tau_bkp(lambda, c);
    auto t1 = std::chrono::steady_clock::now();
    MPoly residual = bkp_residual(tau.poly);
    auto t2 = std::chrono::steady_clock::now();

    auto ms = [](auto a, auto b) {
      return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };
    std::string pstr;
    for (std::size_t i = 0; i < parts.size(); ++i)
      pstr += (i ? "," : "") + std::to_string(parts[i]);
    out << s << "  (" << pstr << ")  " << tau.poly.term_count() << "  " << ms(t0, t1) << "  "
        << ms(t1, t2) << "  " << (residual.is_zero() ? "yes" : "NO") << "\n";
  }
  return out.str();
}

}  // namespace bdkp
