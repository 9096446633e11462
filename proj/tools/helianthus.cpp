// Command-line harness: generate families, certify regularity, evaluate
// satisfaction probabilities, search for sunflowers, run the extraction
// process, probe subspace families, and sweep regularity brackets.
//
// Exit codes: 0 success, 1 negative search result, 2 input error,
// 3 resource budget exhausted.

#include "helianthus/errors.hpp"
#include "helianthus/eval.hpp"
#include "helianthus/families.hpp"
#include "helianthus/json_io.hpp"
#include "helianthus/process.hpp"
#include "helianthus/recursion.hpp"
#include "helianthus/regular.hpp"
#include "helianthus/sunflower.hpp"
#include "helianthus/sweep.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <iostream>
#include <sstream>

namespace {

using namespace helianthus;
using io::json;

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Globals {
  std::uint64_t seed = 0;
  int threads = 0;
  std::size_t budget_pivots = regular::kDefaultPivotBudget;
  std::string out = "-";
};

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
}

core::SetSystem load_family(const std::string& path) { return io::set_system_from_json(io::read_json_file(path)); }

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      seeds.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--seeds expects a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  if (seeds.empty()) throw InputError("--seeds must not be empty");
  return seeds;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int w = std::stoi(text);
      return {w, w};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InputError("--w-range expects LO:HI, got \"" + text + "\"");
  }
}

int emit(const Globals& g, const json& j, int code = 0) {
  io::write_text(g.out, io::dump(j));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-system regularity and sunflower experiments"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized step");
  app.add_option("--threads", g.threads, "OpenMP threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--budget-pivots", g.budget_pivots, "Pivot budget for each regularity certification");
  app.add_option("--out", g.out, "Output file ('-' for stdout)");

  // generate
  std::string spec_path;
  auto* generate = app.add_subcommand("generate", "Build a family from a JSON spec");
  generate->add_option("spec", spec_path, "Spec JSON file")->required();

  // certify
  std::string family_path, kappa_text, tol_text = "1/1000";
  bool want_max = false;
  auto* certify = app.add_subcommand("certify", "Decide kappa-regularity or bracket the maximal kappa");
  certify->add_option("family", family_path, "Family JSON file")->required();
  auto* kappa_opt = certify->add_option("--kappa", kappa_text, "Regularity parameter p/q");
  auto* max_flag = certify->add_flag("--max", want_max, "Bracket the maximal regularity");
  certify->add_option("--tol", tol_text, "Bracket width for --max");
  kappa_opt->excludes(max_flag);

  // satprob
  std::string p_text, eps_text;
  std::uint64_t mc_trials = 0;
  bool approx = false;
  auto* satprob = app.add_subcommand("satprob", "Exact p-biased satisfaction probability");
  satprob->add_option("family", family_path, "Family JSON file")->required();
  satprob->add_option("--p", p_text, "Bias p/q")->required();
  satprob->add_option("--eps", eps_text, "Also decide (p, eps)-satisfaction");
  satprob->add_option("--mc", mc_trials, "Add a Monte Carlo estimate with this many trials");
  satprob->add_flag("--approx-sunflower", approx, "Evaluate the core-stripped residual instead (needs --eps)");

  // sunflower
  int r = 2;
  std::string method = "exact";
  std::uint64_t tries = 256;
  auto* sunflower_cmd = app.add_subcommand("sunflower", "Search for an r-sunflower");
  sunflower_cmd->add_option("family", family_path, "Family JSON file")->required();
  sunflower_cmd->add_option("--r", r, "Number of petals")->required();
  sunflower_cmd->add_option("--method", method, "er | reg | color | exact")
      ->check(CLI::IsMember({"er", "reg", "color", "exact"}));
  sunflower_cmd->add_option("--kappa", kappa_text, "Heavy-set parameter for --method reg");
  sunflower_cmd->add_option("--tries", tries, "Random colorings before the exhaustive sweep");

  // disjoint
  std::string mode = "exact";
  auto* disjoint = app.add_subcommand("disjoint", "Search for r pairwise disjoint members");
  disjoint->add_option("family", family_path, "Family JSON file")->required();
  disjoint->add_option("--r", r, "How many sets")->required();
  disjoint->add_option("--mode", mode, "exact | greedy")->check(CLI::IsMember({"exact", "greedy"}));

  // process
  std::string dist_path, beta_text;
  auto* process_cmd = app.add_subcommand("process", "Run the disjoint-tuple mass extraction process");
  process_cmd->add_option("family", family_path, "Family JSON file")->required();
  process_cmd->add_option("dist", dist_path, "Weighted family JSON (defaults to uniform)");
  process_cmd->add_option("--r", r, "Tuple size")->required();
  process_cmd->add_option("--beta", beta_text, "Analyse the star system against this beta");

  // subspace
  std::string alpha_text = "1/2";
  auto* subspace = app.add_subcommand("subspace", "Largeness, zero-free vector and regularity of F(V)");
  subspace->add_option("spec", spec_path, "Subspace JSON {p, generator, [n]}")->required();
  subspace->add_option("--alpha", alpha_text, "Largeness parameter p/q");

  // recursion
  std::string c_text = "2", c_prime_text = "24", oracle = "exhaustive";
  auto* recursion = app.add_subcommand("recursion", "Trace the width-halving recursion and kappa0 conditions");
  recursion->add_option("family", family_path, "Family JSON file")->required();
  recursion->add_option("--eps", eps_text, "Error parameter")->required();
  recursion->add_option("--oracle", oracle, "exhaustive | identity")->check(CLI::IsMember({"exhaustive", "identity"}));
  recursion->add_option("--c", c_text, "Oracle size exponent c");
  recursion->add_option("--c-prime", c_prime_text, "kappa0 exponent c'");

  // sweep
  std::string what = "beta", w_range = "2:4", seeds_text = "1";
  int trials = 8;
  bool timing = false;
  std::string sweep_tol = "1/64";
  auto* sweep_cmd = app.add_subcommand("sweep", "Bracket beta, gamma or alpha from below over a corpus (CSV)");
  sweep_cmd->add_option("--what", what, "beta | gamma | alpha")->check(CLI::IsMember({"beta", "gamma", "alpha"}));
  sweep_cmd->add_option("--w-range", w_range, "LO:HI");
  sweep_cmd->add_option("--r", r, "Disjoint-set count for alpha");
  sweep_cmd->add_option("--seeds", seeds_text, "Comma-separated seed list");
  sweep_cmd->add_option("--trials", trials, "Random families per seed")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--tol", sweep_tol, "Bracket width per family");
  sweep_cmd->add_flag("--timing", timing, "Append a wall-clock seconds column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (g.threads > 0) omp_set_num_threads(g.threads);

    if (generate->parsed()) return emit(g, io::to_json(io::family_from_spec(io::read_json_file(spec_path))));

    if (certify->parsed()) {
      const auto family = load_family(family_path);
      if (!core::is_non_trivial(family)) throw InputError("certification needs a non-trivial family");
      const regular::CertifyOptions options{g.budget_pivots};
      if (want_max) {
        const auto bracket = regular::max_regularity(family, rational_arg(tol_text, "tol"), options);
        return emit(g, io::to_json(bracket));
      }
      if (kappa_text.empty()) throw InputError("certify needs --kappa or --max");
      const auto cert = regular::certify_family(family, rational_arg(kappa_text, "kappa"), options);
      return emit(g, io::to_json(cert), regular::is_regular(cert) ? 0 : kExitNegative);
    }

    if (satprob->parsed()) {
      const auto family = load_family(family_path);
      const Rational p = rational_arg(p_text, "p");
      json out;
      if (approx) {
        if (eps_text.empty()) throw InputError("--approx-sunflower needs --eps");
        if (family.empty()) throw InputError("approximate sunflower check needs a non-empty family");
        const auto check = eval::is_approx_sunflower(family, p, rational_arg(eps_text, "eps"));
        out = io::to_json(check);
      } else {
        const Rational prob = eval::satisfaction_probability(family, p);
        out = {{"probability", to_string(prob)}, {"probability_float", to_double(prob)}};
        if (!eps_text.empty()) out["satisfying"] = prob > 1 - rational_arg(eps_text, "eps");
      }
      if (mc_trials > 0) out["monte_carlo"] = io::to_json(eval::monte_carlo_satisfaction(family, p, mc_trials, g.seed));
      return emit(g, out);
    }

    if (sunflower_cmd->parsed()) {
      const auto family = load_family(family_path);
      if (method == "er") {
        const auto report = sunflower::erdos_rado_extract(family, r);
        return emit(g, io::to_json(report, family), report.found ? 0 : kExitNegative);
      }
      if (method == "reg") {
        if (kappa_text.empty()) throw InputError("--method reg needs --kappa");
        const auto report = sunflower::regularity_guided_extract(family, r, rational_arg(kappa_text, "kappa"));
        return emit(g, io::to_json(report, family), report.found ? 0 : kExitNegative);
      }
      const auto cert = method == "color" ? sunflower::sunflower_from_approximate(family, r, g.seed, tries)
                                          : sunflower::find_sunflower_exact(family, r);
      if (!cert) return emit(g, json{{"outcome", "not_found"}}, kExitNegative);
      return emit(g, json{{"outcome", "found"}, {"certificate", io::to_json(*cert, family)}});
    }

    if (disjoint->parsed()) {
      const auto family = load_family(family_path);
      const auto hit = sunflower::find_disjoint(
          family, r, mode == "greedy" ? sunflower::DisjointMode::Greedy : sunflower::DisjointMode::Exact);
      if (!hit) return emit(g, json{{"outcome", "not_found"}}, kExitNegative);
      json sets = json::array();
      for (const auto i : *hit) sets.push_back(family[i].indices());
      return emit(g, json{{"outcome", "found"}, {"indices", *hit}, {"sets", sets}});
    }

    if (process_cmd->parsed()) {
      const auto family = load_family(family_path);
      regular::WeightedFamily d = regular::WeightedFamily::uniform(family);
      if (!dist_path.empty()) {
        d = io::weighted_from_json(io::read_json_file(dist_path));
        if (!core::same_family(d.family(), family)) throw InputError("distribution file lists a different family");
      }
      const auto trace = process::run_extraction(d, r);
      json out = {{"trace", io::to_json(trace)}};
      if (!trace.iterations.empty()) {
        const auto star = process::build_star(trace);
        out["star"] = io::to_json(star);
        if (!beta_text.empty()) {
          const Rational beta = rational_arg(beta_text, "beta");
          out["analysis"] = io::to_json(process::analyze_star(star, d, trace, beta));
          out["eta"] = to_string(process::eta_bound(r, beta));
        }
      }
      return emit(g, out);
    }

    if (subspace->parsed()) {
      const auto spec = io::subspace_from_json(io::read_json_file(spec_path));
      const Rational alpha = rational_arg(alpha_text, "alpha");
      const auto large = families::is_alpha_large(spec, alpha);
      const auto vec = families::zero_free_vector(spec);
      const auto reg = families::subspace_regularity_check(spec, alpha);
      json out = {{"p", spec.p},
                  {"n", spec.n},
                  {"k", spec.k()},
                  {"alpha", to_string(alpha)},
                  {"alpha_large", large.large},
                  {"uniform_regular_at_p_pow_alpha", reg.holds},
                  {"zero_free_vector", vec ? json(*vec) : json(nullptr)}};
      if (large.witness) out["largeness_witness"] = {{"columns", *large.witness}, {"rank", large.witness_rank}};
      if (reg.witness) out["regularity_witness"] = {{"columns", *reg.witness}, {"count", reg.witness_count}};
      return emit(g, out);
    }

    if (recursion->parsed()) {
      const auto family = load_family(family_path);
      const Rational eps = rational_arg(eps_text, "eps");
      const eval::RecursionParams params{rational_arg(c_text, "c"), rational_arg(c_prime_text, "c-prime")};
      const eval::CompressionOracle chosen =
          oracle == "identity" ? eval::CompressionOracle(eval::identity_oracle)
                               : eval::CompressionOracle([](const core::SetSystem& f, const Rational& e) {
                                   return eval::exhaustive_compression_oracle(f, e);
                                 });
      const auto trace = eval::sandwich_recursion(family, eps, chosen, params);
      json out = {{"trace", io::to_json(trace)}};
      if (eps < 1) out["kappa0"] = io::to_json(eval::kappa0_conditions(family.width(), eps, params.c, params.c_prime));
      return emit(g, out, trace.all_checks_pass() ? 0 : kExitNegative);
    }

    if (sweep_cmd->parsed()) {
      sweep::SweepConfig config;
      config.what = sweep::parse_quantity(what);
      std::tie(config.w_min, config.w_max) = parse_range(w_range);
      config.r = r;
      config.seeds = parse_seed_list(seeds_text);
      config.trials_per_seed = trials;
      config.tol = rational_arg(sweep_tol, "tol");
      config.pivot_budget = g.budget_pivots;
      const auto rows = sweep::run_sweep(config);
      std::string csv = sweep::to_csv(rows, timing);
      csv.pop_back();
      io::write_text(g.out, csv);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitResource;
  } catch (const OracleContractError& e) {
    std::cerr << "oracle contract violated: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitInput;
}
