#pragma once

#include "helianthus/rational.hpp"
#include "helianthus/set_system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace helianthus::families {

using core::ElementSet;
using core::SetSystem;

/// Generators refuse to build families with more members than this
/// (ResourceError).
inline constexpr std::uint64_t kMaxGeneratedSets = 1'000'000;

/// All transversals of w blocks of size kappa; block i is
/// [i*kappa, (i+1)*kappa). Members are listed in lexicographic order.
/// Throws InputError unless w, kappa >= 1 and w*kappa <= 64.
[[nodiscard]] SetSystem block_family(int w, int kappa);

/// (1 - (1-p)^kappa)^w: a p-biased set hits every block.
[[nodiscard]] Rational block_family_satisfaction(int w, int kappa, const Rational& p);

/// m = w - t + 1 blocks X_1..X_m of size t. Members are X_i together with
/// one element from every other block, listed by i and then
/// lexicographically. Every member has size w and any two members meet.
/// Throws InputError unless 2 <= t and 2t <= w + 1.
[[nodiscard]] SetSystem intersecting_block_family(int w, int t);

/// Uniform-distribution mass of a single element: 1/m + (1 - 1/m)/t.
[[nodiscard]] Rational intersecting_block_singleton_mass(int w, int t);
/// Uniform-distribution mass above a whole block: 1/m.
[[nodiscard]] Rational intersecting_block_block_mass(int w, int t);

/// All w-subsets of [0, n) in lexicographic order.
[[nodiscard]] SetSystem complete_uniform_family(int w, int n);

/// m distinct random sets over [0, n), deterministic per seed. With
/// nonredundant every set has exactly w elements (hence an antichain);
/// otherwise sizes are uniform in [1, w]. Throws InputError when fewer
/// than m such sets exist.
[[nodiscard]] SetSystem random_family(int n, int w, std::size_t m, std::uint64_t seed, bool nonredundant);

/// Binomial coefficient, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t binomial(int n, int k);

/// A subspace V of GF(p)^n given by k generator rows.
struct SubspaceSpec {
  int p = 2;
  int n = 0;
  std::vector<std::vector<int>> generator;

  [[nodiscard]] int k() const { return static_cast<int>(generator.size()); }
};

/// Throws InputError unless p is a prime <= 13, every row has n entries in
/// [0, p), and the rows are linearly independent.
void validate(const SubspaceSpec& spec);

/// Rank over GF(p) of the generator restricted to the columns in `columns`.
[[nodiscard]] int restricted_rank(const SubspaceSpec& spec, std::uint32_t columns);

/// Vectors of V, by coefficient vector in lexicographic order (first
/// coefficient most significant). Requires p^k <= 10^6.
[[nodiscard]] std::vector<std::vector<int>> enumerate_subspace(const SubspaceSpec& spec);

/// {S(v) : v in V} with S(v) = {(i, v_i)} and (i, a) flattened to i*p + a.
/// Requires n*p <= 64 and p^k <= 10^5.
[[nodiscard]] SetSystem subspace_family(const SubspaceSpec& spec);

struct LargenessResult {
  bool large = false;
  /// First failing coordinate set (as a bitmask over [n]) when not large.
  std::optional<std::uint32_t> witness;
  int witness_rank = 0;
};

/// dim(V_I) >= alpha |I| for every non-empty I. Requires n <= 16.
[[nodiscard]] LargenessResult is_alpha_large(const SubspaceSpec& spec, const Rational& alpha);

/// First vector of V (in enumeration order) with no zero coordinate.
[[nodiscard]] std::optional<std::vector<int>> zero_free_vector(const SubspaceSpec& spec);

struct SubspaceRegularity {
  bool holds = false;
  std::optional<std::uint32_t> witness;  // coordinate set of a violating pattern
  /// Members agreeing with a realised pattern on the witness coordinates.
  std::uint64_t witness_count = 0;
};

/// Checks that under the uniform distribution on F(V) every partial
/// assignment on coordinates I (the only T with positive mass) has mass
/// <= p^{-alpha |I|}, i.e. F(V) is p^alpha-regular through the uniform
/// witness. Counts are taken by enumerating V when p^k * 2^n <= 2^24 and
/// from ranks otherwise; the comparison count^b * p^{a|I|} <= |V|^b with
/// alpha = a/b is exact. Requires n <= 16 and alpha >= 0.
[[nodiscard]] SubspaceRegularity subspace_regularity_check(const SubspaceSpec& spec, const Rational& alpha);

}  // namespace helianthus::families
