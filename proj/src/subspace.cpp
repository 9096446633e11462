#include "helianthus/errors.hpp"
#include "helianthus/families.hpp"

#include <algorithm>
#include <bit>

namespace helianthus::families {

namespace {

bool is_small_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13; }

int inverse_mod(int a, int p) {
  int result = 1;
  for (int e = p - 2, base = a % p; e > 0; e >>= 1, base = base * base % p)
    if (e & 1) result = result * base % p;
  return result;
}

int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    const auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                    [c](const std::vector<int>& row) { return row[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const int inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::uint64_t subspace_size(const SubspaceSpec& spec, std::uint64_t limit) {
  std::uint64_t size = 1;
  for (int i = 0; i < spec.k(); ++i) {
    size *= static_cast<std::uint64_t>(spec.p);
    if (size > limit) throw ResourceError("subspace has more than " + std::to_string(limit) + " vectors");
  }
  return size;
}

}  // namespace

void validate(const SubspaceSpec& spec) {
  if (!is_small_prime(spec.p)) throw InputError("subspace field size must be a prime <= 13");
  if (spec.n < 1 || spec.n > core::kMaxUniverse) throw InputError("subspace length n must lie in [1, 64]");
  for (const auto& row : spec.generator) {
    if (static_cast<int>(row.size()) != spec.n) throw InputError("generator row length differs from n");
    if (std::any_of(row.begin(), row.end(), [&](int x) { return x < 0 || x >= spec.p; }))
      throw InputError("generator entries must lie in [0, p)");
  }
  if (rank_mod_p(spec.generator, spec.p) != spec.k()) throw InputError("generator rows are linearly dependent");
}

int restricted_rank(const SubspaceSpec& spec, std::uint32_t columns) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : spec.generator) {
    std::vector<int> kept;
    for (int i = 0; i < spec.n; ++i)
      if ((columns >> i) & 1U) kept.push_back(row[static_cast<std::size_t>(i)]);
    rows.push_back(std::move(kept));
  }
  return rank_mod_p(std::move(rows), spec.p);
}

std::vector<std::vector<int>> enumerate_subspace(const SubspaceSpec& spec) {
  validate(spec);
  const std::uint64_t size = subspace_size(spec, 1'000'000);
  std::vector<std::vector<int>> out;
  out.reserve(size);
  std::vector<int> coeff(static_cast<std::size_t>(spec.k()), 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::vector<int> v(static_cast<std::size_t>(spec.n), 0);
    for (int j = 0; j < spec.k(); ++j)
      for (int i = 0; i < spec.n; ++i)
        v[static_cast<std::size_t>(i)] =
            (v[static_cast<std::size_t>(i)] + coeff[static_cast<std::size_t>(j)] * spec.generator[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) % spec.p;
    out.push_back(std::move(v));
    for (int j = spec.k() - 1; j >= 0; --j) {
      if (++coeff[static_cast<std::size_t>(j)] < spec.p) break;
      coeff[static_cast<std::size_t>(j)] = 0;
    }
  }
  return out;
}

SetSystem subspace_family(const SubspaceSpec& spec) {
  validate(spec);
  if (spec.n * spec.p > core::kMaxUniverse) throw InputError("subspace universe n*p exceeds 64");
  subspace_size(spec, 100'000);
  std::vector<ElementSet> sets;
  for (const auto& v : enumerate_subspace(spec)) {
    std::uint64_t mask = 0;
    for (int i = 0; i < spec.n; ++i) mask |= std::uint64_t{1} << (i * spec.p + v[static_cast<std::size_t>(i)]);
    sets.emplace_back(mask);
  }
  return SetSystem(spec.n * spec.p, std::move(sets));
}

LargenessResult is_alpha_large(const SubspaceSpec& spec, const Rational& alpha) {
  validate(spec);
  if (spec.n > 16) throw InputError("largeness check needs n <= 16");
  for (std::uint32_t cols = 1; cols < (1U << spec.n); ++cols) {
    const int rank = restricted_rank(spec, cols);
    if (Rational(rank) < alpha * std::popcount(cols)) return {false, cols, rank};
  }
  return {true, std::nullopt, 0};
}

std::optional<std::vector<int>> zero_free_vector(const SubspaceSpec& spec) {
  for (auto& v : enumerate_subspace(spec))
    if (std::none_of(v.begin(), v.end(), [](int x) { return x == 0; })) return std::move(v);
  return std::nullopt;
}

SubspaceRegularity subspace_regularity_check(const SubspaceSpec& spec, const Rational& alpha) {
  validate(spec);
  if (spec.n > 16) throw InputError("subspace regularity check needs n <= 16");
  if (alpha < 0) throw InputError("alpha must be non-negative");
  const std::uint64_t size = subspace_size(spec, 1'000'000);
  const bool enumerate = size << spec.n <= (std::uint64_t{1} << 24);

  std::vector<std::uint32_t> zero_masks;
  if (enumerate)
    for (const auto& v : enumerate_subspace(spec)) {
      std::uint32_t z = 0;
      for (int i = 0; i < spec.n; ++i)
        if (v[static_cast<std::size_t>(i)] == 0) z |= 1U << i;
      zero_masks.push_back(z);
    }

  const BigInt a = alpha.get_num();
  const unsigned long b = alpha.get_den().get_ui();
  BigInt total_b;
  mpz_pow_ui(total_b.get_mpz_t(), BigInt(size).get_mpz_t(), b);
  for (std::uint32_t cols = 1; cols < (1U << spec.n); ++cols) {
    // Every realised pattern on `cols` is matched by as many vectors as the
    // all-zero pattern, the kernel of the restriction.
    std::uint64_t count = 0;
    if (enumerate) {
      count = static_cast<std::uint64_t>(
          std::count_if(zero_masks.begin(), zero_masks.end(), [cols](std::uint32_t z) { return (z & cols) == cols; }));
    } else {
      count = 1;
      for (int i = restricted_rank(spec, cols); i < spec.k(); ++i) count *= static_cast<std::uint64_t>(spec.p);
    }
    BigInt lhs, p_part;
    mpz_pow_ui(lhs.get_mpz_t(), BigInt(count).get_mpz_t(), b);
    const BigInt exponent = a * std::popcount(cols);
    mpz_pow_ui(p_part.get_mpz_t(), BigInt(spec.p).get_mpz_t(), exponent.get_ui());
    if (lhs * p_part > total_b) return {false, cols, count};
  }
  return {true, std::nullopt, 0};
}

}  // namespace helianthus::families
