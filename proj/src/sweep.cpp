#include "helianthus/sweep.hpp"

#include "helianthus/errors.hpp"
#include "helianthus/eval.hpp"
#include "helianthus/families.hpp"
#include "helianthus/random.hpp"
#include "helianthus/regular.hpp"
#include "helianthus/sunflower.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace helianthus::sweep {

namespace {

constexpr std::size_t kMaxCorpusFamily = 200;

void add_if(std::vector<CorpusEntry>& out, Quantity q, int r, std::string label, SetSystem family) {
  if (family.size() <= kMaxCorpusFamily && qualifies(q, family, r)) out.push_back({std::move(label), std::move(family)});
}

std::string label(const char* kind, std::initializer_list<std::pair<const char*, int>> params) {
  std::string out = kind;
  for (const auto& [name, value] : params) out += std::string(" ") + name + "=" + std::to_string(value);
  return out;
}

struct Outcome {
  std::optional<Rational> lower;
  bool skipped = false;
};

Outcome bracket(const SetSystem& family, const SweepConfig& config) {
  try {
    const auto b = regular::max_regularity(family, config.tol, regular::CertifyOptions{config.pivot_budget});
    return {b.lo, false};
  } catch (const ResourceError&) {
    return {std::nullopt, true};
  }
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::Beta:
      return "beta";
    case Quantity::Gamma:
      return "gamma";
    case Quantity::Alpha:
      return "alpha";
  }
  return "?";
}

Quantity parse_quantity(const std::string& text) {
  if (text == "beta") return Quantity::Beta;
  if (text == "gamma") return Quantity::Gamma;
  if (text == "alpha") return Quantity::Alpha;
  throw InputError("unknown sweep quantity \"" + text + "\" (expected beta, gamma or alpha)");
}

bool qualifies(Quantity q, const SetSystem& family, int r) {
  if (!core::is_non_trivial(family)) return false;
  switch (q) {
    case Quantity::Beta:
      return sunflower::is_intersecting(family);
    case Quantity::Gamma:
      return !eval::is_satisfying(family, Rational(1, 2), Rational(1, 2));
    case Quantity::Alpha:
      return !sunflower::find_disjoint(family, r).has_value();
  }
  return false;
}

std::vector<CorpusEntry> generated_corpus(Quantity q, int w, int r) {
  std::vector<CorpusEntry> out;
  auto uniform = [&](int n) {
    if (n >= w && n <= core::kMaxUniverse && families::binomial(n, w) <= kMaxCorpusFamily)
      add_if(out, q, r, label("complete_uniform", {{"w", w}, {"n", n}}), families::complete_uniform_family(w, n));
  };
  switch (q) {
    case Quantity::Beta:
      uniform(2 * w - 1);
      for (int t = 2; 2 * t <= w + 1; ++t)
        add_if(out, q, r, label("intersecting_block", {{"w", w}, {"t", t}}), families::intersecting_block_family(w, t));
      break;
    case Quantity::Gamma:
      for (int kappa = 1; w * kappa <= core::kMaxUniverse; ++kappa) {
        if (families::block_family_satisfaction(w, kappa, Rational(1, 2)) > Rational(1, 2)) break;
        std::uint64_t size = 1;
        for (int i = 0; i < w && size <= kMaxCorpusFamily; ++i) size *= static_cast<std::uint64_t>(kappa);
        if (size > kMaxCorpusFamily) break;
        add_if(out, q, r, label("block", {{"w", w}, {"kappa", kappa}}), families::block_family(w, kappa));
      }
      uniform(2 * w - 1);
      break;
    case Quantity::Alpha:
      uniform(r * w - 1);
      uniform(2 * w - 1);
      for (int t = 2; 2 * t <= w + 1; ++t)
        add_if(out, q, r, label("intersecting_block", {{"w", w}, {"t", t}}), families::intersecting_block_family(w, t));
      break;
  }
  return out;
}

std::optional<SetSystem> random_member(Quantity q, int w, int r, std::uint64_t seed) {
  const int n = std::min(core::kMaxUniverse, q == Quantity::Alpha ? std::max(r * w, w + 1)
                                             : q == Quantity::Beta ? 2 * w + 1
                                                                   : 2 * w + 2);
  const int min_size = (w + 1) / 2;
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    const auto target = static_cast<std::size_t>(2 + bounded(rng, 9));
    std::vector<core::ElementSet> sets;
    for (int draw = 0; draw < 200 && sets.size() < target; ++draw) {
      const int size = min_size + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(w - min_size + 1)));
      std::vector<int> pool(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
      std::uint64_t mask = 0;
      for (int i = 0; i < size; ++i) {
        const auto j = static_cast<std::size_t>(i) + bounded(rng, static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        mask |= std::uint64_t{1} << pool[static_cast<std::size_t>(i)];
      }
      const core::ElementSet s(mask);
      if (std::find(sets.begin(), sets.end(), s) != sets.end()) continue;
      if (q == Quantity::Beta && std::any_of(sets.begin(), sets.end(), [s](auto t) { return !t.intersects(s); }))
        continue;
      sets.push_back(s);
    }
    SetSystem family(n, std::move(sets));
    if (qualifies(q, family, r)) return family;
  }
  return std::nullopt;
}

std::vector<CorpusEntry> build_corpus(Quantity q, int w, int r, const std::vector<std::uint64_t>& seeds,
                                      int trials_per_seed) {
  auto out = generated_corpus(q, w, r);
  for (const std::uint64_t seed : seeds)
    for (int i = 0; i < trials_per_seed; ++i) {
      const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(w) * 1'000'003 + static_cast<std::uint64_t>(i));
      if (auto family = random_member(q, w, r, trial_seed))
        out.push_back({"random seed=" + std::to_string(seed) + " trial=" + std::to_string(i), std::move(*family)});
    }
  return out;
}

Rational upper_cap(Quantity q, int w, int r) {
  switch (q) {
    case Quantity::Beta:
      return w;
    case Quantity::Gamma:
      return w * helianthus::pow(Rational(4), static_cast<unsigned>(w));
    case Quantity::Alpha:
      return Rational(w) * r * (r - 1) / 2;
  }
  return 0;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.w_min < 1 || config.w_max < config.w_min || config.w_max > 16)
    throw InputError("sweep needs 1 <= w_min <= w_max <= 16");
  if (config.r < 2) throw InputError("sweep needs r >= 2");
  if (config.tol <= 0) throw InputError("sweep tolerance must be positive");
  std::vector<SweepRow> rows;
  for (int w = config.w_min; w <= config.w_max; ++w) {
    const auto start = std::chrono::steady_clock::now();
    const auto corpus = build_corpus(config.what, w, config.r, config.seeds, config.trials_per_seed);
    std::vector<Outcome> outcomes(corpus.size());
    const auto count = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i)
      outcomes[static_cast<std::size_t>(i)] = bracket(corpus[static_cast<std::size_t>(i)].family, config);

    SweepRow row;
    row.what = config.what;
    row.w = w;
    row.r = config.r;
    row.corpus_size = corpus.size();
    row.cap = upper_cap(config.what, w, config.r);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (outcomes[i].skipped) {
        ++row.skipped;
        continue;
      }
      if (outcomes[i].lower && (!row.best_lower || *outcomes[i].lower > *row.best_lower)) {
        row.best_lower = outcomes[i].lower;
        row.best_label = corpus[i].label;
      }
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows, bool timing) {
  std::ostringstream out;
  out << "quantity,w,r,corpus_size,skipped,best_lower,best_lower_float,best_family,upper_cap,upper_cap_float";
  if (timing) out << ",seconds";
  out << '\n';
  for (const auto& row : rows) {
    out << to_string(row.what) << ',' << row.w << ',' << row.r << ',' << row.corpus_size << ',' << row.skipped << ',';
    if (row.best_lower)
      out << helianthus::to_string(*row.best_lower) << ',' << fixed(to_double(*row.best_lower)) << ",\"" << row.best_label << '"';
    else
      out << ",,";
    out << ',' << helianthus::to_string(row.cap) << ',' << fixed(to_double(row.cap));
    if (timing) out << ',' << fixed(row.seconds);
    out << '\n';
  }
  return out.str();
}

}  // namespace helianthus::sweep
