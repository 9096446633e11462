#include "helianthus/families.hpp"
#include "helianthus/kernels.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <vector>

using namespace helianthus;
using namespace helianthus::kernels;

namespace {

std::vector<std::uint64_t> terms_of(const core::SetSystem& f) {
  std::vector<std::uint64_t> out;
  for (const auto s : f) out.push_back(s.mask());
  return out;
}

// Decodes a base-r coloring and checks every color class contains a term.
bool good(const std::vector<std::uint64_t>& terms, int n, int r, std::uint64_t code) {
  std::vector<std::uint64_t> cls(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < n; ++i) {
    cls[code % static_cast<std::uint64_t>(r)] |= std::uint64_t{1} << i;
    code /= static_cast<std::uint64_t>(r);
  }
  for (const auto c : cls) {
    bool hit = false;
    for (const auto t : terms)
      if ((t & ~c) == 0) hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("truth table kernels agree with brute force") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 6 + static_cast<int>(seed % 8);
    const auto f = families::random_family(n, 3, 3 + seed % 6, seed, false);
    const auto terms = terms_of(f);
    std::uint64_t expect = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) expect += oracle::fx(f, x) ? 1 : 0;
    CHECK(count_true_inputs_serial(terms, n) == expect);
    CHECK(count_true_inputs_omp(terms, n) == expect);
  }
}

TEST_CASE("monte carlo kernels agree") {
  const auto f = families::random_family(14, 3, 8, 2, true);
  const auto terms = terms_of(f);
  for (const std::uint64_t trials : {std::uint64_t{1}, kChunkTrials - 1, kChunkTrials, 3 * kChunkTrials + 17}) {
    const MonteCarloConfig config{0.4, trials, 99, 14};
    CHECK(monte_carlo_hits_serial(terms, config) == monte_carlo_hits_omp(terms, config));
  }
}

TEST_CASE("coloring kernels agree") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 7 + static_cast<int>(seed % 3);
    const int r = 2 + static_cast<int>(seed % 2);
    const auto f = families::random_family(n, 2, 6 + seed % 5, seed + 7, true);
    const auto terms = terms_of(f);
    const auto a = first_good_coloring_serial(terms, n, r);
    const auto b = first_good_coloring_omp(terms, n, r);
    CHECK(a == b);
    if (a) CHECK(good(terms, n, r, *a));
    std::optional<std::uint64_t> first;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(r);
    for (std::uint64_t code = 0; code < total && !first; ++code)
      if (good(terms, n, r, code)) first = code;
    CHECK(a == first);
  }
}
