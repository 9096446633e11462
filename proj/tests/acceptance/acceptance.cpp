// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails or overruns its time limit.

#include "helianthus/eval.hpp"
#include "helianthus/families.hpp"
#include "helianthus/process.hpp"
#include "helianthus/random.hpp"
#include "helianthus/recursion.hpp"
#include "helianthus/regular.hpp"
#include "helianthus/sunflower.hpp"
#include "helianthus/sweep.hpp"

#include "../cli/cli_runner.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace helianthus;
using core::ElementSet;
using core::SetSystem;
using regular::WeightedFamily;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    out.ok = false;
    out.detail += " [over time limit]";
  }
  if (!out.ok) ++failures;
  std::printf("%s C%-2d %s: %s (%.2f s / limit %.0f s)\n", out.ok ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs,
              limit_seconds);
  std::fflush(stdout);
}

Rational random_weight(Rng& rng) { return Rational(static_cast<long>(1 + bounded(rng, 9))); }

WeightedFamily random_distribution(const SetSystem& f, Rng& rng) {
  std::vector<Rational> w;
  Rational total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    w.push_back(random_weight(rng));
    total += w.back();
  }
  for (auto& x : w) x /= total;
  return WeightedFamily(f, w);
}

// Largest kappa in a fixed grid for which d is regular, by direct mass scan.
std::optional<Rational> grid_kappa(const WeightedFamily& d) {
  static const std::vector<Rational> grid{Rational(2), Rational(3, 2), Rational(5, 4), Rational(11, 10), Rational(1)};
  const auto masses = regular::all_subset_masses(d);
  for (const auto& k : grid) {
    bool ok = true;
    for (const auto& [t, m] : masses)
      if (m * helianthus::pow(k, static_cast<unsigned>(t.size())) > 1) ok = false;
    if (ok) return k;
  }
  return std::nullopt;
}

bool mass_regular(const WeightedFamily& d, const Rational& kappa) {
  for (const auto& [t, m] : regular::all_subset_masses(d))
    if (!t.empty() && m * helianthus::pow(kappa, static_cast<unsigned>(t.size())) > 1) return false;
  return true;
}

Outcome c1() {
  Rng rng(derive_seed(1, 0));
  int matched = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(bounded(rng, 12));
    const int w = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n)));
    const bool nonred = bounded(rng, 2) == 1;
    std::uint64_t available = 0;
    for (int s = nonred ? w : 1; s <= w; ++s) available += families::binomial(n, s);
    const auto m = 1 + bounded(rng, std::min<std::uint64_t>(10, available));
    const auto f = families::random_family(n, w, m, derive_seed(2, static_cast<std::uint64_t>(i)), nonred);
    const long den = 2 + static_cast<long>(bounded(rng, 8));
    const Rational p = Rational(1 + static_cast<long>(bounded(rng, static_cast<std::uint64_t>(den - 1)))) / den;
    if (eval::satisfaction_probability(f, p) == oracle::inclusion_exclusion(f, p)) ++matched;
  }
  return {matched == 500, std::to_string(matched) + "/500 exact matches"};
}

Outcome c2() {
  const auto f = families::block_family(4, 2);
  const auto b = regular::max_regularity(f, Rational(1, 10000));
  const Rational pr = eval::satisfaction_probability(f, Rational(1, 2));
  const bool ok = b.lo <= 2 && 2 <= b.hi && b.hi - b.lo <= Rational(1, 10000) && pr == Rational(81, 256) &&
                  mass_regular(b.lo_witness, b.lo);
  return {ok, "bracket [" + to_string(b.lo) + ", " + to_string(b.hi) + "], Pr = " + to_string(pr)};
}

Outcome c3() {
  const SetSystem tri(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto b = regular::max_regularity(tri, Rational(1, 10000));
  const auto at = regular::certify_family(tri, Rational(3, 2));
  const auto above = regular::certify_family(tri, Rational(8, 5));
  const bool witness = regular::is_regular(at) && mass_regular(std::get<regular::Regular>(at).witness, Rational(3, 2)) &&
                       std::get<regular::Regular>(at).witness.is_distribution();
  const bool infeasible = std::holds_alternative<regular::Infeasible>(above);
  const bool ok = b.lo <= Rational(3, 2) && Rational(3, 2) <= b.hi && witness && infeasible;
  return {ok, "bracket [" + to_string(b.lo) + ", " + to_string(b.hi) + "], witness at 3/2 " +
                  (witness ? "verified" : "missing") + ", 8/5 " + (infeasible ? "infeasible" : "not infeasible")};
}

Outcome c4() {
  std::vector<SetSystem> corpus;
  for (int w = 1; w <= 4; ++w)
    for (auto& e : sweep::generated_corpus(sweep::Quantity::Beta, w, 2)) corpus.push_back(std::move(e.family));
  const std::size_t generated = corpus.size();
  std::size_t random = 0;
  for (std::uint64_t s = 0; random < 200 && s < 10000; ++s) {
    const int w = 1 + static_cast<int>(s % 4);
    if (auto f = sweep::random_member(sweep::Quantity::Beta, w, 2, derive_seed(4, s))) {
      corpus.push_back(std::move(*f));
      ++random;
    }
  }
  int bad = 0;
  Rational best_ratio = 0;
  for (const auto& f : corpus) {
    if (!sunflower::is_intersecting(f)) ++bad;
    const auto b = regular::max_regularity(f, Rational(1, 64));
    if (b.lo > f.width()) ++bad;
    if (regular::is_regular(regular::certify_family(f, f.width() + Rational(1, 1000)))) ++bad;
    if (b.lo / f.width() > best_ratio) best_ratio = b.lo / f.width();
  }
  return {bad == 0 && random == 200, std::to_string(generated) + " generated + " + std::to_string(random) +
                                         " random families, " + std::to_string(bad) +
                                         " exceed width; best lower/width = " + to_string(best_ratio)};
}

Outcome c5() {
  Rng rng(derive_seed(5, 0));
  int push = 0, cond = 0, push_bad = 0, cond_bad = 0;
  for (std::uint64_t s = 0; (push < 200 || cond < 200) && s < 5000; ++s) {
    const int n = 4 + static_cast<int>(bounded(rng, 5));
    const int w = 2 + static_cast<int>(bounded(rng, 2));
    const auto f = families::random_family(n, w, 2 + bounded(rng, 7), derive_seed(6, s), false);
    if (!core::is_non_trivial(f)) continue;
    const auto d = random_distribution(f, rng);
    const auto kappa = grid_kappa(d);
    if (!kappa) continue;
    if (!regular::is_regular(regular::is_kappa_regular(d, *kappa))) ++push_bad;
    if (push < 200) {
      std::vector<ElementSet> images;
      for (const auto set : f) {
        const auto idx = set.indices();
        std::uint64_t keep = 0;
        while (keep == 0)
          for (const int i : idx)
            if (bounded(rng, 2) == 1) keep |= std::uint64_t{1} << i;
        images.emplace_back(keep);
      }
      const auto pushed = regular::pushforward_upper(d, images);
      if (!pushed.is_distribution() || !regular::is_regular(regular::is_kappa_regular(pushed, *kappa)) ||
          !mass_regular(pushed, *kappa))
        ++push_bad;
      ++push;
    }
    if (cond < 200) {
      std::vector<ElementSet> keep;
      for (const auto set : f)
        if (bounded(rng, 2) == 1) keep.push_back(set);
      if (keep.empty()) keep.push_back(f[0]);
      const auto c = regular::condition(d, SetSystem(f.universe_size(), keep));
      Rational alpha = 0;
      for (const auto set : keep) alpha += d.weight(*f.index_of(set));
      const Rational k2 = *kappa * c.alpha;
      if (c.alpha != alpha || !c.distribution.is_distribution() ||
          !regular::is_regular(regular::is_kappa_regular(c.distribution, k2)) || !mass_regular(c.distribution, k2))
        ++cond_bad;
      ++cond;
    }
  }
  return {push == 200 && cond == 200 && push_bad == 0 && cond_bad == 0,
          std::to_string(push) + " push-forward (" + std::to_string(push_bad) + " violations), " + std::to_string(cond) +
              " conditioning (" + std::to_string(cond_bad) + " violations)"};
}

Outcome c6() {
  int ok = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int n = 9 + static_cast<int>(s % 4);
    const auto f = families::random_family(n, 3, 49, derive_seed(7, s), true);
    const auto r = sunflower::erdos_rado_extract(f, 3);
    if (f.size() == 49 && r.found && r.found->petal_indices.size() == 3 && sunflower::verify_sunflower(f, *r.found) &&
        oracle::sunflower_exists(SetSystem(f.universe_size(), [&] {
                                   std::vector<ElementSet> petals;
                                   for (const auto i : r.found->petal_indices) petals.push_back(f[i]);
                                   return petals;
                                 }()),
                                 3))
      ++ok;
  }
  return {ok == 100, std::to_string(ok) + "/100 verified certificates"};
}

Outcome c7() {
  int made = 0, ok = 0;
  for (std::uint64_t s = 0; made < 50 && s < 20000; ++s) {
    Rng rng(derive_seed(8, s));
    const int core_size = static_cast<int>(bounded(rng, 3));
    const int rest = 6 + static_cast<int>(bounded(rng, 5));
    const int w = 1 + static_cast<int>(bounded(rng, 3));
    std::uint64_t available = families::binomial(rest, w);
    const auto m = 2 + bounded(rng, std::min<std::uint64_t>(12, available - 1));
    const auto residual = families::random_family(rest, w, m, derive_seed(9, s), true);
    std::vector<ElementSet> sets;
    const std::uint64_t core = (std::uint64_t{1} << core_size) - 1;
    for (const auto r : residual) sets.emplace_back(core | (r.mask() << core_size));
    const SetSystem f(core_size + rest, sets);
    const auto check = eval::is_approx_sunflower(f, Rational(1, 2), Rational(1, 2));
    if (!check.holds || check.degenerate || !core::is_non_redundant(f) || f.size() < 2) continue;
    ++made;
    const auto cert = sunflower::sunflower_from_approximate(f, 2, derive_seed(10, s), 8);
    if (cert && sunflower::verify_sunflower(f, *cert)) ++ok;
  }
  return {made == 50 && ok == 50, std::to_string(ok) + "/" + std::to_string(made) + " verified 2-sunflowers"};
}

Outcome c8() {
  int runs = 0, bad = 0, restricted = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(11, s));
    const int r = 2 + static_cast<int>(s % 2);
    SetSystem f;
    switch (s % 4) {
      case 0:
        f = families::random_family(10, 3, 4 + bounded(rng, 12), derive_seed(12, s), false);
        break;
      case 1:
        f = families::complete_uniform_family(2, 3 + static_cast<int>(bounded(rng, 4)));
        break;
      case 2:
        f = families::random_family(6, 3, 4 + bounded(rng, 12), derive_seed(12, s), true);
        break;
      default:
        f = families::intersecting_block_family(3 + static_cast<int>(bounded(rng, 3)), 2);
        break;
    }
    const auto d = bounded(rng, 2) == 1 ? WeightedFamily::uniform(f) : random_distribution(f, rng);
    const auto t = process::run_extraction(d, r);
    ++runs;
    Rational mass = 1;
    if (t.iterations.size() > f.size()) ++bad;
    std::vector<Rational> taken(f.size(), 0);
    for (const auto& it : t.iterations) {
      if (it.mass_before != mass || it.mass_after != it.mass_before - r * it.delta) ++bad;
      mass = it.mass_after;
      if (it.union_set.size() > f.width() * r) ++bad;
      for (const auto i : it.tuple) taken[i] += it.delta;
    }
    if (t.final.total() != mass) ++bad;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (taken[i] > d.weight(i)) ++bad;
    if (t.halt == process::HaltCause::MassBelowHalf && t.delta_total() < Rational(1, 2 * r)) ++bad;
    if (!sunflower::find_disjoint(f, 2 * r)) {
      ++restricted;
      for (std::size_t a = 0; a < t.iterations.size(); ++a)
        for (std::size_t b = a + 1; b < t.iterations.size(); ++b)
          if (!t.iterations[a].union_set.intersects(t.iterations[b].union_set)) ++bad;
    }
  }
  return {bad == 0, std::to_string(runs) + " runs (" + std::to_string(restricted) + " without 2r disjoint sets), " +
                        std::to_string(bad) + " invariant violations"};
}

Outcome c9() {
  using families::SubspaceSpec;
  const SubspaceSpec gf5{5, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}}};
  std::vector<std::string> failed;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) failed.push_back(what);
  };
  expect(families::is_alpha_large(gf5, Rational(1, 2)).large, "gf5 half-large");
  const auto v = families::zero_free_vector(gf5);
  expect(v.has_value(), "gf5 zero-free vector");
  if (v) {
    const auto vectors = families::enumerate_subspace(gf5);
    expect(std::find(vectors.begin(), vectors.end(), *v) != vectors.end(), "zero-free vector lies in V");
    for (const int x : *v) expect(x != 0, "zero-free vector has no zeros");
  }
  expect(families::subspace_regularity_check(gf5, Rational(1, 2)).holds, "gf5 regular at alpha 1/2");
  // Independent mass scan: every pattern mass m satisfies m^2 * 5^|T| <= 1.
  const auto d = WeightedFamily::uniform(families::subspace_family(gf5));
  bool scan = true;
  for (const auto& [t, m] : regular::all_subset_masses(d))
    if (m * m * helianthus::pow(Rational(5), static_cast<unsigned>(t.size())) > 1) scan = false;
  expect(scan, "gf5 mass scan");
  const auto over = families::subspace_regularity_check(gf5, 1);
  expect(!over.holds && over.witness.has_value(), "gf5 fails above largeness");

  const SubspaceSpec full{3, 2, {{1, 0}, {0, 1}}};
  expect(families::is_alpha_large(full, 1).large, "full space 1-large");
  expect(families::subspace_regularity_check(full, 1).holds, "full space regular at alpha 1");
  expect(families::zero_free_vector({3, 2, {{1, 1}}}) == std::vector<int>{1, 1}, "span(1,1) zero-free");
  expect(!families::zero_free_vector({3, 2, {{1, 0}}}).has_value(), "span(1,0) has none");
  expect(families::subspace_family({3, 2, {}}).size() == 1, "k=0 single set");
  return {failed.empty(), failed.empty() ? "all subspace checks hold" : "failed: " + failed.front()};
}

Outcome c10() {
  int tau_bad = 0;
  for (int w = 2; w <= 64; ++w) {
    const auto t = eval::tau_check(w, Rational(1, 2));
    if (w % 2 == 0 && !(t.holds && t.equality)) ++tau_bad;
    if (w % 2 == 1 && !(t.holds && t.numeric != Verdict::Fail)) ++tau_bad;
  }
  int k_bad = 0;
  for (int w = 3; w <= 10; ++w)
    for (const Rational eps : {Rational(1, 2), Rational(1, 4)}) {
      const auto r = eval::kappa0_conditions(w, eps, 2, 24);
      if (!r.all_pass() || !r.c_prime_at_least_12c) ++k_bad;
    }
  return {tau_bad == 0 && k_bad == 0, std::to_string(tau_bad) + " tau failures over w=2..64, " + std::to_string(k_bad) +
                                          " kappa0 failures over 16 (w, eps) cases at c=2, c'=24"};
}

Outcome c11() {
  cli::write_file("acc_random_spec.json", R"({"kind": "random", "n": 10, "w": 3, "m": 20, "seed": 42, "nonredundant": true})");
  cli::write_file("acc_block_spec.json", R"({"kind": "block", "w": 4, "kappa": 2})");
  cli::write_file("acc_subspace.json", R"({"p": 5, "generator": [[1, 0, 1, 1], [0, 1, 1, 2]]})");
  const std::vector<std::string> commands{
      "generate acc_random_spec.json --out acc_random.json",
      "generate acc_block_spec.json --out acc_block.json",
      "certify acc_random.json --max --tol 1/256",
      "certify acc_block.json --kappa 2",
      "satprob acc_random.json --p 1/2 --eps 1/2 --mc 50000 --seed 7",
      "sunflower acc_random.json --r 3 --method er",
      "sunflower acc_random.json --r 2 --method color --seed 5",
      "disjoint acc_random.json --r 2 --mode greedy",
      "process acc_random.json --r 2 --beta 3/2",
      "subspace acc_subspace.json --alpha 1/2",
      "recursion acc_block.json --eps 1/2",
      "sweep --what beta --w-range 2:4 --seeds 1,2 --trials 4",
      "sweep --what gamma --w-range 2:4 --seeds 3 --trials 4",
      "sweep --what alpha --w-range 2:3 --r 3 --seeds 1 --trials 4",
  };
  // A command's output is its stdout plus the file it writes with --out.
  auto capture = [](const std::string& command, const char* threads) {
    std::string text = cli::run(command + threads).out;
    const auto at = command.find("--out ");
    if (at != std::string::npos) {
      const std::string path = command.substr(at + 6);
      text += cli::read_file(path);
    }
    return text;
  };
  std::vector<std::string> first;
  for (const auto& c : commands) first.push_back(capture(c, " --threads 1"));
  int differ = 0, empty = 0;
  for (int rep = 0; rep < 2; ++rep)
    for (std::size_t i = 0; i < commands.size(); ++i)
      if (capture(commands[i], rep == 0 ? " --threads 1" : " --threads 4") != first[i]) ++differ;
  for (const auto& out : first)
    if (out.empty()) ++empty;
  return {differ == 0 && empty == 0, std::to_string(commands.size()) + " commands x 3 runs, " + std::to_string(differ) +
                                         " byte differences, " + std::to_string(empty) + " empty outputs"};
}

}  // namespace

int main() {
  criterion(1, "exact evaluator vs inclusion-exclusion", 60, c1);
  criterion(2, "block family w=4 kappa=2 bracket and probability", 10, c2);
  criterion(3, "triangle family bracket and certificates", 5, c3);
  criterion(4, "intersecting corpus never exceeds width", 300, c4);
  criterion(5, "push-forward and conditioning transforms", 60, c5);
  criterion(6, "Erdos-Rado extraction guarantee", 60, c6);
  criterion(7, "approximate sunflower to 2-sunflower pipeline", 60, c7);
  criterion(8, "extraction process invariants", 120, c8);
  criterion(9, "subspace suite", 10, c9);
  criterion(10, "tau and kappa0 validators", 10, c10);
  criterion(11, "byte-identical CLI outputs", 600, c11);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
