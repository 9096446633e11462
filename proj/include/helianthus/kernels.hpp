#pragma once

// Data-parallel inner loops. Every kernel has a plain serial reference
// (`*_serial`) and an OpenMP version (`*_omp`); both return bit-identical
// results for any thread count. Tests compare the two, and bench/ times them.

#include <cstdint>
#include <optional>
#include <span>

namespace helianthus::kernels {

/// Terms of a monotone DNF as bitmasks; f(x) = 1 iff some term is inside x.
using Terms = std::span<const std::uint64_t>;

/// |{x in {0,1}^n : f(x) = 1}|. Requires n <= 40.
std::uint64_t count_true_inputs_serial(Terms terms, int n);
std::uint64_t count_true_inputs_omp(Terms terms, int n);

struct MonteCarloConfig {
  double p = 0.5;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int universe = 0;
};

/// Trials are cut into fixed chunks of kChunkTrials, each driven by its own
/// derived seed, so the hit count does not depend on scheduling.
inline constexpr std::uint64_t kChunkTrials = 1U << 14;

/// Number of p-biased samples W with some term inside W.
std::uint64_t monte_carlo_hits_serial(Terms terms, const MonteCarloConfig& config);
std::uint64_t monte_carlo_hits_omp(Terms terms, const MonteCarloConfig& config);

/// Smallest coloring index c in [0, r^n) such that every color class
/// contains a term, where digit i of c in base r is the color of element i.
/// Requires r^n < 2^63.
std::optional<std::uint64_t> first_good_coloring_serial(Terms terms, int n, int r);
std::optional<std::uint64_t> first_good_coloring_omp(Terms terms, int n, int r);

}  // namespace helianthus::kernels
