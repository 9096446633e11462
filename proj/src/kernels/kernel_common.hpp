#pragma once

#include "helianthus/kernels.hpp"
#include "helianthus/random.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace helianthus::kernels::detail {

inline bool covers(Terms terms, std::uint64_t x) {
  return std::any_of(terms.begin(), terms.end(), [x](std::uint64_t t) { return (t & ~x) == 0; });
}

inline void check_truth_table_size(int n) {
  if (n < 0 || n > 40) throw std::invalid_argument("truth table enumeration needs 0 <= n <= 40");
}

inline std::uint64_t chunk_count(std::uint64_t trials) { return (trials + kChunkTrials - 1) / kChunkTrials; }

/// Hits within one chunk; chunk k covers trials [k*kChunkTrials, ...).
inline std::uint64_t chunk_hits(Terms terms, const MonteCarloConfig& c, std::uint64_t chunk) {
  Rng rng(derive_seed(c.seed, chunk));
  const std::uint64_t begin = chunk * kChunkTrials;
  const std::uint64_t end = std::min(c.trials, begin + kChunkTrials);
  std::uint64_t hits = 0;
  for (std::uint64_t t = begin; t < end; ++t) {
    std::uint64_t w = 0;
    for (int e = 0; e < c.universe; ++e)
      if (unit(rng) < c.p) w |= std::uint64_t{1} << e;
    hits += covers(terms, w) ? 1 : 0;
  }
  return hits;
}

inline constexpr int kMaxColors = 64;

inline std::uint64_t coloring_space(int n, int r) {
  if (r < 1 || r > kMaxColors || n < 0) throw std::invalid_argument("coloring sweep needs 1 <= r <= 64, n >= 0");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(r))
      throw std::invalid_argument("coloring space r^n too large");
    total *= static_cast<std::uint64_t>(r);
  }
  return total;
}

inline bool coloring_works(Terms terms, int n, int r, std::uint64_t code) {
  std::array<std::uint64_t, kMaxColors> cls{};
  for (int e = 0; e < n; ++e) {
    cls[code % static_cast<std::uint64_t>(r)] |= std::uint64_t{1} << e;
    code /= static_cast<std::uint64_t>(r);
  }
  for (int c = 0; c < r; ++c)
    if (!covers(terms, cls[static_cast<std::size_t>(c)])) return false;
  return true;
}

}  // namespace helianthus::kernels::detail
