#pragma once

#include "helianthus/rational.hpp"
#include "helianthus/set_system.hpp"
#include "helianthus/simplex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace helianthus::sweep {

using core::SetSystem;

/// Which supremum a sweep brackets from below:
///   Beta  - intersecting w-systems,
///   Gamma - w-systems that are not (1/2, 1/2)-satisfying,
///   Alpha - w-systems without r pairwise disjoint members.
enum class Quantity { Beta, Gamma, Alpha };

[[nodiscard]] const char* to_string(Quantity q);
/// Parses "beta", "gamma" or "alpha"; InputError otherwise.
[[nodiscard]] Quantity parse_quantity(const std::string& text);

struct CorpusEntry {
  std::string label;
  SetSystem family;
};

/// True iff the family is non-trivial and has the property the quantity
/// quantifies over.
[[nodiscard]] bool qualifies(Quantity q, const SetSystem& family, int r);

/// Deterministic constructions (complete uniform, intersecting block and
/// block families) that qualify, skipping any with more than 200 members.
[[nodiscard]] std::vector<CorpusEntry> generated_corpus(Quantity q, int w, int r);

/// A random qualifying w-system drawn from `seed`, or nothing if 64 derived
/// attempts all fail to qualify.
[[nodiscard]] std::optional<SetSystem> random_member(Quantity q, int w, int r, std::uint64_t seed);

/// generated_corpus followed by random members; trial i of seed s uses
/// derive_seed(s, i) and contributes at most one family.
[[nodiscard]] std::vector<CorpusEntry> build_corpus(Quantity q, int w, int r, const std::vector<std::uint64_t>& seeds,
                                                    int trials_per_seed);

/// Known upper bound on the supremum: w for Beta, w 4^w for Gamma and
/// w C(r, 2) for Alpha.
[[nodiscard]] Rational upper_cap(Quantity q, int w, int r);

struct SweepConfig {
  Quantity what = Quantity::Beta;
  int w_min = 2;
  int w_max = 4;
  int r = 2;
  std::vector<std::uint64_t> seeds{1};
  int trials_per_seed = 8;
  Rational tol = Rational(1, 64);
  std::size_t pivot_budget = regular::kDefaultPivotBudget;
};

struct SweepRow {
  Quantity what = Quantity::Beta;
  int w = 0;
  int r = 0;
  std::size_t corpus_size = 0;
  /// Families whose bracket search ran out of pivots.
  std::size_t skipped = 0;
  std::optional<Rational> best_lower;
  std::string best_label;
  Rational cap;
  double seconds = 0.0;
};

/// For every w, brackets each corpus family's maximal regularity and keeps
/// the largest certified lower endpoint. Families are processed in
/// parallel and merged in corpus order, so rows do not depend on threads.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// CSV with a header row. The seconds column is only written when
/// `timing` is set, keeping default output byte-stable.
[[nodiscard]] std::string to_csv(const std::vector<SweepRow>& rows, bool timing);

}  // namespace helianthus::sweep
