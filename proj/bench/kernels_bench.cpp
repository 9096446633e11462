#include "helianthus/families.hpp"
#include "helianthus/kernels.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

namespace {

using namespace helianthus;

std::vector<std::uint64_t> terms_of(const core::SetSystem& family) {
  std::vector<std::uint64_t> out;
  for (const auto s : family) out.push_back(s.mask());
  return out;
}

const std::vector<std::uint64_t>& truth_table_terms() {
  static const auto terms = terms_of(families::random_family(22, 4, 60, 7, true));
  return terms;
}

template <auto Kernel>
void BM_TruthTable(benchmark::State& state) {
  const auto& terms = truth_table_terms();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(terms, 22));
}

template <auto Kernel>
void BM_MonteCarlo(benchmark::State& state) {
  const auto& terms = truth_table_terms();
  const kernels::MonteCarloConfig config{0.5, 1U << 20, 11, 22};
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(terms, config));
}

// Four disjoint 3-sets need 12 elements, so no 4-coloring of 11 elements
// is good and the sweep scans all 4^11 codes.
template <auto Kernel>
void BM_ColoringSweep(benchmark::State& state) {
  static const auto terms = terms_of(families::complete_uniform_family(3, 11));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(terms, 11, 4));
}

}  // namespace

BENCHMARK(BM_TruthTable<kernels::count_true_inputs_serial>)->Name("truth_table/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TruthTable<kernels::count_true_inputs_omp>)->Name("truth_table/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo<kernels::monte_carlo_hits_serial>)->Name("monte_carlo/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo<kernels::monte_carlo_hits_omp>)->Name("monte_carlo/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColoringSweep<kernels::first_good_coloring_serial>)->Name("coloring/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColoringSweep<kernels::first_good_coloring_omp>)->Name("coloring/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
