#include "helianthus/json_io.hpp"

#include "helianthus/errors.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace helianthus::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t get_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

int get_small_int(const json& j, const char* key, std::int64_t lo, std::int64_t hi) {
  const auto v = get_int(j, key);
  if (v < lo || v > hi)
    throw InputError(std::string("field \"") + key + "\" must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  return static_cast<int>(v);
}

json set_json(core::ElementSet s) { return s.indices(); }

json sets_json(const std::vector<core::ElementSet>& sets) {
  json out = json::array();
  for (const auto s : sets) out.push_back(set_json(s));
  return out;
}

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json verdict_json(const eval::ConditionCheck& c) {
  return {{"verdict", to_string(c.verdict)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
}

}  // namespace

json to_json(const core::SetSystem& family) {
  return {{"universe", family.universe_size()}, {"sets", sets_json(family.sets())}};
}

core::SetSystem set_system_from_json(const json& j) {
  const int universe = get_small_int(j, "universe", 0, core::kMaxUniverse);
  const json& sets = field(j, "sets");
  if (!sets.is_array()) throw InputError("field \"sets\" must be an array");
  std::vector<core::ElementSet> members;
  for (const json& s : sets) {
    if (!s.is_array()) throw InputError("each set must be an array of indices");
    std::uint64_t mask = 0;
    std::int64_t previous = -1;
    for (const json& x : s) {
      if (!x.is_number_integer()) throw InputError("set indices must be integers");
      const auto i = x.get<std::int64_t>();
      if (i < 0 || i >= universe)
        throw InputError("index " + std::to_string(i) + " outside universe of size " + std::to_string(universe));
      if (i <= previous) throw InputError("indices within a set must be strictly ascending");
      previous = i;
      mask |= std::uint64_t{1} << i;
    }
    const core::ElementSet e(mask);
    if (std::find(members.begin(), members.end(), e) != members.end())
      throw InputError("duplicate set " + e.to_string());
    members.push_back(e);
  }
  return core::SetSystem(universe, std::move(members));
}

json to_json(const regular::WeightedFamily& d) {
  json out = to_json(d.family());
  out["weights"] = rational_list(d.weights());
  return out;
}

regular::WeightedFamily weighted_from_json(const json& j) {
  auto family = set_system_from_json(j);
  const json& weights = field(j, "weights");
  if (!weights.is_array()) throw InputError("field \"weights\" must be an array");
  std::vector<Rational> values;
  for (const json& w : weights) {
    if (!w.is_string()) throw InputError("weights must be \"num/den\" strings");
    values.push_back(parse_rational(w.get<std::string>()));
  }
  return regular::WeightedFamily(std::move(family), std::move(values));
}

families::SubspaceSpec subspace_from_json(const json& j) {
  families::SubspaceSpec spec;
  spec.p = get_small_int(j, "p", 2, 13);
  const json& gen = field(j, "generator");
  if (!gen.is_array()) throw InputError("field \"generator\" must be an array of rows");
  for (const json& row : gen) {
    if (!row.is_array()) throw InputError("generator rows must be arrays");
    std::vector<int> values;
    for (const json& x : row) {
      if (!x.is_number_integer()) throw InputError("generator entries must be integers");
      values.push_back(x.get<int>());
    }
    spec.generator.push_back(std::move(values));
  }
  if (j.contains("n"))
    spec.n = get_small_int(j, "n", 1, core::kMaxUniverse);
  else if (!spec.generator.empty())
    spec.n = static_cast<int>(spec.generator.front().size());
  else
    throw InputError("subspace spec without rows needs an explicit \"n\"");
  families::validate(spec);
  return spec;
}

core::SetSystem family_from_spec(const json& spec) {
  const json& kind_field = field(spec, "kind");
  if (!kind_field.is_string()) throw InputError("field \"kind\" must be a string");
  const auto kind = kind_field.get<std::string>();
  if (kind == "block") return families::block_family(get_small_int(spec, "w", 1, 64), get_small_int(spec, "kappa", 1, 64));
  if (kind == "intersecting_block")
    return families::intersecting_block_family(get_small_int(spec, "w", 1, 64), get_small_int(spec, "t", 1, 64));
  if (kind == "complete_uniform")
    return families::complete_uniform_family(get_small_int(spec, "w", 0, 64), get_small_int(spec, "n", 0, 64));
  if (kind == "subspace") return families::subspace_family(subspace_from_json(spec));
  if (kind == "random") {
    if (!spec.contains("seed")) throw InputError("random spec needs an explicit \"seed\"");
    const json& seed = spec.at("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
      throw InputError("field \"seed\" must be a non-negative integer");
    bool nonredundant = false;
    if (spec.contains("nonredundant")) {
      if (!spec.at("nonredundant").is_boolean()) throw InputError("field \"nonredundant\" must be a boolean");
      nonredundant = spec.at("nonredundant").get<bool>();
    }
    return families::random_family(get_small_int(spec, "n", 1, 64), get_small_int(spec, "w", 1, 64),
                                   static_cast<std::size_t>(get_small_int(spec, "m", 0, 1'000'000)),
                                   seed.get<std::uint64_t>(), nonredundant);
  }
  throw InputError("unknown family kind \"" + kind + "\"");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text << '\n';
}

std::string dump(const json& j) { return j.dump(2); }

json to_json(const Interval& x) { return {{"lo", x.lo}, {"hi", x.hi}}; }

json to_json(const regular::RegularityCertificate& cert) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, regular::Regular>) {
          return {{"status", "regular"}, {"witness", to_json(c.witness)}};
        } else if constexpr (std::is_same_v<T, regular::Violation>) {
          return {{"status", "violation"}, {"t", set_json(c.t)}, {"mass", to_string(c.mass)}};
        } else {
          return {{"status", "infeasible"}, {"binding", sets_json(c.binding)}};
        }
      },
      cert);
}

json to_json(const regular::RegularityBracket& b) {
  return {{"lo", to_string(b.lo)},
          {"hi", to_string(b.hi)},
          {"lo_float", to_double(b.lo)},
          {"hi_float", to_double(b.hi)},
          {"hi_is_cap", b.hi_is_cap},
          {"lp_calls", b.lp_calls},
          {"lo_witness", to_json(b.lo_witness)}};
}

json to_json(const eval::ApproxSunflowerCheck& c) {
  return {{"holds", c.holds},
          {"degenerate", c.degenerate},
          {"core", set_json(c.core)},
          {"residual", to_json(c.residual)},
          {"probability", to_string(c.probability)}};
}

json to_json(const eval::MonteCarloEstimate& e) {
  return {{"estimate", e.estimate}, {"std_error", e.std_error}, {"hits", e.hits}, {"trials", e.trials}};
}

json to_json(const sunflower::SunflowerCertificate& cert, const core::SetSystem& family) {
  json petals = json::array();
  for (const auto i : cert.petal_indices) petals.push_back(set_json(family[i]));
  return {{"core", set_json(cert.core)},
          {"petal_indices", cert.petal_indices},
          {"petals", petals},
          {"verified", sunflower::verify_sunflower(family, cert)}};
}

json to_json(const sunflower::ExtractionReport& report, const core::SetSystem& family) {
  json trace = json::array();
  for (const auto& step : report.trace) trace.push_back({{"t", set_json(step.t)}, {"size", step.size}});
  json out = {{"outcome", report.found ? "found" : "exhausted"},
              {"initial_size", report.initial_size},
              {"trace", trace},
              {"final_family", to_json(report.final_family)}};
  if (report.found) out["certificate"] = to_json(*report.found, family);
  return out;
}

json to_json(const process::ProcessTrace& trace) {
  json its = json::array();
  for (const auto& it : trace.iterations)
    its.push_back({{"tuple", it.tuple},
                   {"delta", to_string(it.delta)},
                   {"union", set_json(it.union_set)},
                   {"mass_before", to_string(it.mass_before)},
                   {"mass_after", to_string(it.mass_after)}});
  return {{"r", trace.r},
          {"halt", process::to_string(trace.halt)},
          {"iterations", its},
          {"delta_total", to_string(trace.delta_total())},
          {"final_weights", rational_list(trace.final.weights())}};
}

json to_json(const process::StarSystem& star) {
  return {{"family", to_json(star.family)},
          {"raw_mass", rational_list(star.raw_mass)},
          {"delta_total", to_string(star.delta_total)},
          {"distribution", rational_list(star.distribution.weights())},
          {"member_of_iteration", star.member_of_iteration}};
}

json to_json(const process::StarOutcome& outcome) {
  if (const auto* reg = std::get_if<process::RegularReport>(&outcome))
    return {{"status", "star_regular"}, {"beta", to_string(reg->beta)}};
  const auto& a = std::get<process::StarAnalysis>(outcome);
  json parts = json::array();
  for (std::size_t k = 0; k < a.t_parts.size(); ++k)
    parts.push_back({{"iteration", a.iterations_above_t[k]}, {"j", a.j[k]}, {"piece", set_json(a.t_parts[k])}});
  return {{"status", "analysed"},
          {"t", set_json(a.t)},
          {"star_mass", to_string(a.star_mass)},
          {"pieces", parts},
          {"t_star", set_json(a.t_star)},
          {"delta_above_t", to_string(a.delta_above_t)},
          {"delta_at_t_star", to_string(a.delta_at_t_star)},
          {"delta_t_star_inside", to_string(a.delta_t_star_inside)},
          {"original_mass_above_t_star", to_string(a.original_mass_above_t_star)},
          {"checks",
           {{"star_violation", a.a_star_violation},
            {"majority_piece", a.b_majority},
            {"t_star_size", a.c_t_star_size},
            {"telescoping", a.d_telescoping},
            {"chain", a.chain_holds},
            {"chain_unit", a.chain_unit_holds}}},
          {"base_bound", to_string(a.base_bound)},
          {"eta_cap", to_string(a.eta_cap)},
          {"kappa_cap", to_json(a.kappa_cap)},
          {"kappa_from_d", to_json(a.kappa_from_d)}};
}

json to_json(const eval::RecursionTrace& trace) {
  json levels = json::array();
  for (const auto& l : trace.levels) {
    json level = {{"depth", l.depth},
                  {"w", l.w},
                  {"eps", to_string(l.eps)},
                  {"family", to_json(l.family)},
                  {"pr_f_zero", to_string(l.pr_f_zero)},
                  {"base_case", l.base_case}};
    if (!l.base_case) {
      level["f1"] = to_json(l.f1);
      level["f2"] = to_json(l.f2);
      level["f3"] = to_json(l.f3);
      level["f4"] = to_json(l.f4);
      level["f5"] = to_json(l.f5);
      level["log_w_upper"] = to_string(l.log_w_upper);
      level["gamma"] = to_string(l.gamma);
      level["eps_next"] = to_string(l.eps_next);
      level["pr_f1_zero"] = to_string(l.pr_f1_zero);
      level["pr_f2_zero"] = to_string(l.pr_f2_zero);
      level["pr_f3_zero"] = to_string(l.pr_f3_zero);
      level["pr_f5_zero"] = to_string(l.pr_f5_zero);
      level["oracle_gap"] = to_string(l.oracle_gap);
      level["f3_constant_true"] = l.f3_constant_true;
      level["checks"] = {{"f_le_f3_plus_gap", l.chain_f_le_f3_plus_gap},
                         {"gap_le_gamma", l.chain_gap_le_gamma},
                         {"f3_le_f5", l.chain_f3_le_f5},
                         {"sandwich", l.sandwich_holds},
                         {"identity", l.identity_holds}};
      level["kappa0"] = to_json(l.kappa0);
      level["kappa0_next"] = to_json(l.kappa0_next);
      level["f2_size_bound"] = to_json(l.f2_size_bound);
      level["f4_mass_bound"] = to_json(l.f4_mass_bound);
    }
    levels.push_back(std::move(level));
  }
  return {{"levels", levels}, {"all_checks_pass", trace.all_checks_pass()}};
}

json to_json(const eval::TauReport& r) {
  return {{"w", r.w},
          {"half", r.half},
          {"holds", r.holds},
          {"equality", r.equality},
          {"numeric", to_string(r.numeric)},
          {"tau_w", to_json(r.tau_w)},
          {"tau_half", to_json(r.tau_half)}};
}

json to_json(const eval::Kappa0Report& r) {
  return {{"w", r.w},
          {"eps", to_string(r.eps)},
          {"c", to_string(r.c)},
          {"c_prime", to_string(r.c_prime)},
          {"c_prime_at_least_12c", r.c_prime_at_least_12c},
          {"cond_i", verdict_json(r.cond_i)},
          {"cond_ii", verdict_json(r.cond_ii)},
          {"cond_iii", verdict_json(r.cond_iii)},
          {"tau", to_json(r.tau)},
          {"all_pass", r.all_pass()}};
}

}  // namespace helianthus::io
