#pragma once

#include "helianthus/rational.hpp"
#include "helianthus/set_system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace helianthus::sunflower {

using core::ElementSet;
using core::SetSystem;

/// r members (by index) whose pairwise intersections all equal `core`.
struct SunflowerCertificate {
  ElementSet core;
  std::vector<std::size_t> petal_indices;
};

/// Checks r >= 2, distinct in-range indices, and S_i & S_j == core for
/// every pair.
[[nodiscard]] bool verify_sunflower(const SetSystem& family, const SunflowerCertificate& cert);

enum class DisjointMode { Exact, Greedy };

struct SearchOptions {
  std::size_t node_budget = 20'000'000;
};

/// r pairwise disjoint members, as ascending indices.
///
/// Exact backtracks in index order and returns the lexicographically first
/// index tuple; it is complete. Greedy repeatedly takes the compatible
/// member meeting the fewest other compatible members (lowest index on
/// ties) and may miss solutions. Throws InputError for r < 1 and
/// ResourceError when Exact expands more than node_budget nodes.
[[nodiscard]] std::optional<std::vector<std::size_t>> find_disjoint(const SetSystem& family, int r,
                                                                    DisjointMode mode = DisjointMode::Exact,
                                                                    const SearchOptions& options = {});

/// Every two members share an element. Vacuously true below two members.
[[nodiscard]] bool is_intersecting(const SetSystem& family);

struct ColoringHit {
  std::vector<std::size_t> indices;  // one member per color, color order
  std::vector<int> coloring;         // color of each universe element
  bool from_sweep = false;
  std::uint64_t tries = 0;  // random colorings drawn
};

/// Colors the universe with r colors and looks for one member inside each
/// color class. Random colorings come first (try k uses derive_seed(seed, k));
/// when they fail and universe <= 16 with r^universe <= 2^32, the coloring
/// space is swept exhaustively in code order. Throws InputError for a
/// trivial family or r < 1.
[[nodiscard]] std::optional<ColoringHit> coloring_search(const SetSystem& family, int r, std::uint64_t seed,
                                                         std::uint64_t max_tries);

/// One restriction step of an extraction recursion: the family was replaced
/// by its link at `t`, leaving `size` members.
struct RestrictionStep {
  ElementSet t;
  std::size_t size = 0;
};

struct ExtractionReport {
  std::optional<SunflowerCertificate> found;  // indices refer to the input family
  std::vector<RestrictionStep> trace;
  std::size_t initial_size = 0;
  /// Family reached after all restrictions (equals chaining link over trace).
  SetSystem final_family;
};

/// Repeatedly: if r pairwise disjoint members exist, report them with the
/// accumulated core; otherwise take a greedy maximal disjoint collection,
/// pick the element of its union lying in the most members (lowest index on
/// ties) and pass to the link at that element. Stops exhausted when the
/// family is empty or only the empty set remains. Throws InputError for a
/// redundant or trivial family or r < 2.
[[nodiscard]] ExtractionReport erdos_rado_extract(const SetSystem& family, int r, const SearchOptions& options = {});

/// Repeatedly passes to the link at heavy_set(F, kappa) while one exists,
/// then looks for r pairwise disjoint members. Same preconditions as
/// erdos_rado_extract; also kappa > 1.
[[nodiscard]] ExtractionReport regularity_guided_extract(const SetSystem& family, int r, const Rational& kappa,
                                                         const SearchOptions& options = {});

/// Complete search: tries cores T = {} and then every subset of a member by
/// size and lexicographic order, looking for r members above T with
/// pairwise disjoint remainders.
[[nodiscard]] std::optional<SunflowerCertificate> find_sunflower_exact(const SetSystem& family, int r,
                                                                       const SearchOptions& options = {});

/// Turns a family whose core-stripped residual system contains r pairwise
/// disjoint sets into an r-sunflower: strips the common core, runs
/// coloring_search on the residuals, and re-attaches the core. Requires a
/// non-redundant family with at least two members (InputError otherwise).
[[nodiscard]] std::optional<SunflowerCertificate> sunflower_from_approximate(const SetSystem& family, int r,
                                                                             std::uint64_t seed,
                                                                             std::uint64_t max_tries);

}  // namespace helianthus::sunflower
