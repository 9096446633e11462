#include "helianthus/families.hpp"

#include "helianthus/errors.hpp"
#include "helianthus/random.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace helianthus::families {

namespace {

void check_count(std::uint64_t count) {
  if (count > kMaxGeneratedSets)
    throw ResourceError("generator would produce " + std::to_string(count) + " sets, limit is " +
                        std::to_string(kMaxGeneratedSets));
}

std::uint64_t checked_power(int base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= static_cast<std::uint64_t>(base);
    check_count(out);
  }
  return out;
}

/// Advances digits (last fastest) through [0, radix)^len; false after the last.
bool odometer(std::vector<int>& digits, int radix) {
  for (auto d = digits.rbegin(); d != digits.rend(); ++d) {
    if (++*d < radix) return true;
    *d = 0;
  }
  return false;
}

/// Uniform random k-subset of [0, n).
ElementSet random_subset(Rng& rng, int n, int k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::uint64_t mask = 0;
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + bounded(rng, static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    mask |= std::uint64_t{1} << pool[static_cast<std::size_t>(i)];
  }
  return ElementSet(mask);
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (out > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(out);
}

SetSystem block_family(int w, int kappa) {
  if (w < 1 || kappa < 1) throw InputError("block family needs w >= 1 and kappa >= 1");
  if (w * kappa > core::kMaxUniverse) throw InputError("block family universe w*kappa exceeds 64");
  check_count(checked_power(kappa, w));
  std::vector<ElementSet> sets;
  std::vector<int> choice(static_cast<std::size_t>(w), 0);
  do {
    std::uint64_t mask = 0;
    for (int i = 0; i < w; ++i) mask |= std::uint64_t{1} << (i * kappa + choice[static_cast<std::size_t>(i)]);
    sets.emplace_back(mask);
  } while (odometer(choice, kappa));
  return SetSystem(w * kappa, std::move(sets));
}

Rational block_family_satisfaction(int w, int kappa, const Rational& p) {
  return helianthus::pow(1 - helianthus::pow(1 - p, static_cast<unsigned>(kappa)), static_cast<unsigned>(w));
}

SetSystem intersecting_block_family(int w, int t) {
  if (t < 2 || 2 * t > w + 1) throw InputError("intersecting block family needs 2 <= t and 2t <= w + 1");
  const int m = w - t + 1;
  if (m * t > core::kMaxUniverse) throw InputError("intersecting block family universe m*t exceeds 64");
  check_count(static_cast<std::uint64_t>(m) * checked_power(t, m - 1));
  std::vector<ElementSet> sets;
  for (int i = 0; i < m; ++i) {
    const std::uint64_t block = ((std::uint64_t{1} << t) - 1) << (i * t);
    std::vector<int> choice(static_cast<std::size_t>(m - 1), 0);
    do {
      std::uint64_t mask = block;
      for (int j = 0, slot = 0; j < m; ++j) {
        if (j == i) continue;
        mask |= std::uint64_t{1} << (j * t + choice[static_cast<std::size_t>(slot++)]);
      }
      sets.emplace_back(mask);
    } while (odometer(choice, t));
  }
  return SetSystem(m * t, std::move(sets));
}

Rational intersecting_block_singleton_mass(int w, int t) {
  const Rational m = w - t + 1;
  return 1 / m + (1 - 1 / m) / t;
}

Rational intersecting_block_block_mass(int w, int t) { return 1 / Rational(w - t + 1); }

SetSystem complete_uniform_family(int w, int n) {
  if (w < 0 || n < w || n > core::kMaxUniverse) throw InputError("complete uniform family needs 0 <= w <= n <= 64");
  check_count(binomial(n, w));
  std::vector<ElementSet> sets;
  std::vector<int> pick(static_cast<std::size_t>(w));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    sets.push_back(ElementSet::from_indices(pick));
    int i = w - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - w + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < w; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return SetSystem(n, std::move(sets));
}

SetSystem random_family(int n, int w, std::size_t m, std::uint64_t seed, bool nonredundant) {
  if (n < 1 || n > core::kMaxUniverse || w < 1 || w > n) throw InputError("random family needs 1 <= w <= n <= 64");
  std::uint64_t available = 0;
  for (int s = nonredundant ? w : 1; s <= w; ++s) {
    const std::uint64_t b = binomial(n, s);
    available = b > ~std::uint64_t{0} - available ? ~std::uint64_t{0} : available + b;
  }
  if (m > available)
    throw InputError("random family asks for " + std::to_string(m) + " distinct sets but only " +
                     std::to_string(available) + " exist");
  check_count(m);

  Rng rng(seed);
  std::vector<ElementSet> sets;
  if (2 * m > available) {
    // Dense request: enumerate every candidate and take a random prefix.
    std::vector<ElementSet> pool;
    for (int s = nonredundant ? w : 1; s <= w; ++s) {
      const auto all = complete_uniform_family(s, n);
      pool.insert(pool.end(), all.begin(), all.end());
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto j = i + bounded(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
      sets.push_back(pool[i]);
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (sets.size() < m) {
      const int size = nonredundant ? w : 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(w)));
      const ElementSet s = random_subset(rng, n, size);
      if (seen.insert(s.mask()).second) sets.push_back(s);
    }
  }
  return SetSystem(n, std::move(sets));
}

}  // namespace helianthus::families
