#include "kernel_common.hpp"

#include <omp.h>

#include <cstdint>
#include <limits>

namespace helianthus::kernels {

std::uint64_t count_true_inputs_omp(Terms terms, int n) {
  detail::check_truth_table_size(n);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t x = 0; x < total; ++x) count += detail::covers(terms, static_cast<std::uint64_t>(x)) ? 1 : 0;
  return count;
}

std::uint64_t monte_carlo_hits_omp(Terms terms, const MonteCarloConfig& config) {
  const auto chunks = static_cast<std::int64_t>(detail::chunk_count(config.trials));
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits)
  for (std::int64_t k = 0; k < chunks; ++k) hits += detail::chunk_hits(terms, config, static_cast<std::uint64_t>(k));
  return hits;
}

std::optional<std::uint64_t> first_good_coloring_omp(Terms terms, int n, int r) {
  const std::uint64_t total = detail::coloring_space(n, r);
  // Scan in ordered blocks so the first block with a hit ends the sweep and
  // the answer is still the globally smallest code.
  constexpr std::uint64_t kBlock = 1U << 16;
  for (std::uint64_t base = 0; base < total; base += kBlock) {
    const std::uint64_t end = std::min(total, base + kBlock);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t i = static_cast<std::int64_t>(base); i < static_cast<std::int64_t>(end); ++i) {
      const auto code = static_cast<std::uint64_t>(i);
      if (code < best && detail::coloring_works(terms, n, r, code)) best = code;
    }
    if (best != std::numeric_limits<std::uint64_t>::max()) return best;
  }
  return std::nullopt;
}

}  // namespace helianthus::kernels
