#include "cli_runner.hpp"

#include <doctest.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Files {
  Files() {
    cli::write_file("cli_block_spec.json", R"({"kind": "block", "w": 4, "kappa": 2})");
    cli::write_file("cli_random_spec.json", R"({"kind": "random", "n": 9, "w": 3, "m": 12, "seed": 5, "nonredundant": true})");
    cli::write_file("cli_unseeded_spec.json", R"({"kind": "random", "n": 9, "w": 3, "m": 12})");
    cli::write_file("cli_bad_spec.json", R"({"kind": "block", "w": "four"})");
    cli::write_file("cli_triangle.json", R"({"universe": 3, "sets": [[0, 1], [0, 2], [1, 2]]})");
    cli::write_file("cli_trivial.json", R"({"universe": 3, "sets": [[]]})");
    cli::write_file("cli_subspace.json", R"({"p": 5, "generator": [[1, 0, 1, 1], [0, 1, 1, 2]]})");
  }
};

const Files files;

}  // namespace

TEST_CASE("generate round trips") {
  const auto g = cli::run("generate cli_block_spec.json --out cli_block.json");
  CHECK(g.exit_code == 0);
  const auto text = cli::read_file("cli_block.json");
  CHECK(json::parse(text)["sets"].size() == 16);
  const auto again = cli::run("generate cli_block_spec.json");
  CHECK(again.out == text);
}

TEST_CASE("input errors exit 2") {
  CHECK(cli::run("generate cli_bad_spec.json").exit_code == 2);
  CHECK(cli::run("generate cli_unseeded_spec.json").exit_code == 2);
  CHECK(cli::run("generate missing_file.json").exit_code == 2);
  CHECK(cli::run("certify cli_trivial.json --kappa 1").exit_code == 2);
  CHECK(cli::run("satprob cli_triangle.json --p 3/2").exit_code == 2);
  CHECK(cli::run("nonsense").exit_code == 2);
}

TEST_CASE("certify") {
  const auto tri = cli::run("certify cli_triangle.json --max --tol 1/1000");
  REQUIRE(tri.exit_code == 0);
  const auto j = json::parse(tri.out);
  CHECK(j["lo_float"].get<double>() <= 1.5);
  CHECK(j["hi_float"].get<double>() >= 1.5);
  cli::run("generate cli_block_spec.json --out cli_block.json");
  CHECK(json::parse(cli::run("certify cli_block.json --kappa 2").out)["status"] == "regular");
  CHECK(cli::run("certify cli_block.json --kappa 3 --budget-pivots 0").exit_code == 3);
}

TEST_CASE("satprob") {
  cli::run("generate cli_block_spec.json --out cli_block.json");
  const auto s = cli::run("satprob cli_block.json --p 1/2");
  REQUIRE(s.exit_code == 0);
  CHECK(json::parse(s.out)["probability"] == "81/256");
}

TEST_CASE("negative searches exit 1") {
  CHECK(cli::run("disjoint cli_triangle.json --r 2").exit_code == 1);
  CHECK(cli::run("sunflower cli_triangle.json --r 3 --method er").exit_code == 1);
  CHECK(cli::run("sunflower cli_triangle.json --r 3 --method exact").exit_code == 1);
}

TEST_CASE("subspace") {
  const auto s = cli::run("subspace cli_subspace.json --alpha 1/2");
  REQUIRE(s.exit_code == 0);
  const auto j = json::parse(s.out);
  CHECK(j["alpha_large"] == true);
  CHECK(j["zero_free_vector"] == json::array({1, 1, 2, 3}));
}

TEST_CASE("outputs do not depend on thread count") {
  cli::run("generate cli_random_spec.json --out cli_random.json");
  const auto a = cli::run("satprob cli_random.json --p 1/3 --mc 70000 --seed 8 --threads 1");
  const auto b = cli::run("satprob cli_random.json --p 1/3 --mc 70000 --seed 8 --threads 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto c = cli::run("sweep --what alpha --w-range 2:3 --r 3 --seeds 1,2 --trials 3 --threads 1");
  const auto d = cli::run("sweep --what alpha --w-range 2:3 --r 3 --seeds 1,2 --trials 3 --threads 3");
  CHECK(c.exit_code == 0);
  CHECK(c.out == d.out);
}
