#include "helianthus/errors.hpp"
#include "helianthus/families.hpp"
#include "helianthus/json_io.hpp"

#include <doctest.h>

using namespace helianthus;
using io::json;
using core::SetSystem;

TEST_CASE("set system round trip") {
  const auto f = families::random_family(12, 4, 15, 3, false);
  const auto j = io::to_json(f);
  CHECK(io::set_system_from_json(j) == f);
  CHECK(io::dump(io::to_json(io::set_system_from_json(j))) == io::dump(j));
}

TEST_CASE("weighted family round trip") {
  const regular::WeightedFamily d(SetSystem(3, {{0}, {1, 2}}), {Rational(1, 3), Rational(2, 3)});
  CHECK(io::weighted_from_json(io::to_json(d)) == d);
}

TEST_CASE("malformed set systems are rejected") {
  CHECK_THROWS_AS((void)io::set_system_from_json(json::parse(R"({"universe": 3, "sets": [[0, 3]]})")), InputError);
  CHECK_THROWS_AS((void)io::set_system_from_json(json::parse(R"({"universe": 3, "sets": [[1, 0]]})")), InputError);
  CHECK_THROWS_AS((void)io::set_system_from_json(json::parse(R"({"universe": 3, "sets": [[0], [0]]})")), InputError);
  CHECK_THROWS_AS((void)io::set_system_from_json(json::parse(R"({"universe": 65, "sets": []})")), InputError);
  CHECK_THROWS_AS((void)io::set_system_from_json(json::parse(R"({"sets": []})")), InputError);
  CHECK_THROWS_AS((void)io::weighted_from_json(json::parse(R"({"universe": 2, "sets": [[0]], "weights": [0.5]})")),
                  InputError);
}

TEST_CASE("family specs") {
  CHECK(io::family_from_spec(json::parse(R"({"kind": "block", "w": 3, "kappa": 2})")).size() == 8);
  CHECK(io::family_from_spec(json::parse(R"({"kind": "intersecting_block", "w": 3, "t": 2})")).size() == 4);
  CHECK(io::family_from_spec(json::parse(R"({"kind": "complete_uniform", "w": 2, "n": 4})")).size() == 6);
  CHECK(io::family_from_spec(json::parse(R"({"kind": "subspace", "p": 5, "generator": [[1,0,1,1],[0,1,1,2]]})"))
            .size() == 25);
  const auto spec = json::parse(R"({"kind": "random", "n": 8, "w": 3, "m": 5, "seed": 4})");
  CHECK(io::family_from_spec(spec) == io::family_from_spec(spec));
  CHECK_THROWS_AS((void)io::family_from_spec(json::parse(R"({"kind": "random", "n": 8, "w": 3, "m": 5})")),
                  InputError);
  CHECK_THROWS_AS((void)io::family_from_spec(json::parse(R"({"kind": "nope"})")), InputError);
  CHECK_THROWS_AS((void)io::family_from_spec(json::parse(R"({"kind": "block", "w": 3})")), InputError);
}
