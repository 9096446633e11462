#include "kernel_common.hpp"

namespace helianthus::kernels {

std::uint64_t count_true_inputs_serial(Terms terms, int n) {
  detail::check_truth_table_size(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < total; ++x) count += detail::covers(terms, x) ? 1 : 0;
  return count;
}

std::uint64_t monte_carlo_hits_serial(Terms terms, const MonteCarloConfig& config) {
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < detail::chunk_count(config.trials); ++k) hits += detail::chunk_hits(terms, config, k);
  return hits;
}

std::optional<std::uint64_t> first_good_coloring_serial(Terms terms, int n, int r) {
  const std::uint64_t total = detail::coloring_space(n, r);
  for (std::uint64_t code = 0; code < total; ++code)
    if (detail::coloring_works(terms, n, r, code)) return code;
  return std::nullopt;
}

}  // namespace helianthus::kernels
