#include "helianthus/errors.hpp"
#include "helianthus/eval.hpp"
#include "helianthus/families.hpp"
#include "helianthus/regular.hpp"
#include "helianthus/sunflower.hpp"

#include <doctest.h>

using namespace helianthus;
using namespace helianthus::families;

namespace {

SubspaceSpec gf5_example() { return {5, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}}}; }

SubspaceSpec full_space(int p, int n) {
  SubspaceSpec s{p, n, {}};
  for (int i = 0; i < n; ++i) {
    std::vector<int> row(static_cast<std::size_t>(n), 0);
    row[static_cast<std::size_t>(i)] = 1;
    s.generator.push_back(row);
  }
  return s;
}

}  // namespace

TEST_CASE("block family") {
  const auto f = block_family(2, 2);
  CHECK(f.size() == 4);
  CHECK(f.universe_size() == 4);
  const auto d = regular::WeightedFamily::uniform(block_family(3, 3));
  CHECK(regular::is_regular(regular::is_kappa_regular(d, 3)));
  CHECK(regular::subset_mass(d, ElementSet{0, 3}) == Rational(1, 9));
  for (int w = 1; w <= 4; ++w)
    for (int k = 1; k <= 3; ++k)
      CHECK(eval::satisfaction_probability(block_family(w, k), Rational(1, 2)) ==
            block_family_satisfaction(w, k, Rational(1, 2)));
  CHECK_THROWS_AS((void)block_family(20, 3), ResourceError);
}

TEST_CASE("intersecting block family") {
  const auto f = intersecting_block_family(3, 2);
  CHECK(f.size() == 4);
  CHECK(sunflower::is_intersecting(f));
  const auto d = regular::WeightedFamily::uniform(f);
  CHECK(intersecting_block_singleton_mass(3, 2) == Rational(3, 4));
  CHECK(regular::subset_mass(d, ElementSet{0}) == Rational(3, 4));
  CHECK(intersecting_block_block_mass(3, 2) == Rational(1, 2));
  CHECK(regular::subset_mass(d, ElementSet{0, 1}) == Rational(1, 2));
  for (int w = 3; w <= 5; ++w)
    for (int t = 2; 2 * t <= w + 1; ++t) {
      const auto g = intersecting_block_family(w, t);
      const auto u = regular::WeightedFamily::uniform(g);
      CHECK(sunflower::is_intersecting(g));
      CHECK(regular::subset_mass(u, ElementSet{0}) == intersecting_block_singleton_mass(w, t));
      CHECK(regular::subset_mass(u, ElementSet(((std::uint64_t{1} << t) - 1))) == intersecting_block_block_mass(w, t));
    }
  CHECK_THROWS_AS((void)intersecting_block_family(4, 3), InputError);
}

TEST_CASE("complete uniform family") {
  const auto f = complete_uniform_family(3, 5);
  CHECK(f.size() == 10);
  CHECK(sunflower::is_intersecting(f));
  CHECK(regular::is_regular(regular::is_kappa_regular(regular::WeightedFamily::uniform(f), Rational(5, 3))));
  CHECK_FALSE(sunflower::is_intersecting(complete_uniform_family(2, 4)));
  const auto wide = complete_uniform_family(2, 9);
  CHECK(wide.size() == 36);
  CHECK(regular::subset_mass(regular::WeightedFamily::uniform(wide), ElementSet{0}) == Rational(2, 9));
}

TEST_CASE("random family") {
  CHECK(random_family(10, 3, 20, 5, true) == random_family(10, 3, 20, 5, true));
  const auto f = random_family(10, 3, 30, 6, true);
  CHECK(f.size() == 30);
  CHECK(core::is_non_redundant(f));
  for (const auto s : f) CHECK(s.size() == 3);
  CHECK_THROWS_AS((void)random_family(4, 2, 7, 1, true), InputError);
  CHECK(random_family(4, 2, 6, 1, true).size() == 6);
}

TEST_CASE("subspace family") {
  const SubspaceSpec zero{3, 2, {}};
  CHECK(subspace_family(zero).size() == 1);
  const SubspaceSpec diag{2, 2, {{1, 1}}};
  const auto f = subspace_family(diag);
  CHECK(same_family(f, SetSystem(4, {{0, 2}, {1, 3}})));
  CHECK(subspace_family(gf5_example()).size() == 25);
  CHECK_THROWS_AS(validate({4, 2, {{1, 0}}}), InputError);
  CHECK_THROWS_AS(validate({3, 2, {{1, 1}, {2, 2}}}), InputError);
}

TEST_CASE("largeness") {
  CHECK(is_alpha_large(full_space(3, 3), 1).large);
  CHECK(is_alpha_large({3, 2, {{1, 0}, {0, 1}}}, 1).large);
  CHECK(is_alpha_large(gf5_example(), Rational(1, 2)).large);
  const auto fail = is_alpha_large(gf5_example(), Rational(3, 4));
  CHECK_FALSE(fail.large);
  REQUIRE(fail.witness);
}

TEST_CASE("zero-free vector") {
  CHECK(zero_free_vector({3, 2, {{1, 1}}}) == std::vector<int>{1, 1});
  CHECK_FALSE(zero_free_vector({3, 2, {{1, 0}}}));
  const auto v = zero_free_vector(gf5_example());
  REQUIRE(v);
  CHECK(*v == std::vector<int>{1, 1, 2, 3});
}

TEST_CASE("subspace regularity") {
  CHECK(subspace_regularity_check(full_space(3, 3), 1).holds);
  CHECK(subspace_regularity_check(gf5_example(), Rational(1, 2)).holds);
  const auto over = subspace_regularity_check(gf5_example(), 1);
  CHECK_FALSE(over.holds);
  CHECK(over.witness);

  // Cross-check the exact verdict against the LP-free mass computation.
  const auto f = subspace_family(gf5_example());
  const auto d = regular::WeightedFamily::uniform(f);
  CHECK(regular::is_regular(regular::is_kappa_regular(d, 2)));
  CHECK_FALSE(regular::is_regular(regular::is_kappa_regular(d, 3)));
}
