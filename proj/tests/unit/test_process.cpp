#include "helianthus/errors.hpp"
#include "helianthus/families.hpp"
#include "helianthus/process.hpp"

#include <doctest.h>

using namespace helianthus;
using namespace helianthus::process;

TEST_CASE("run_extraction examples") {
  const auto d = WeightedFamily::uniform(SetSystem(3, {{0}, {1}, {2}}));
  const auto t = run_extraction(d, 2);
  REQUIRE(t.iterations.size() == 1);
  CHECK(t.iterations[0].delta == Rational(1, 3));
  CHECK(t.iterations[0].mass_after == Rational(1, 3));
  CHECK(t.halt == HaltCause::MassBelowHalf);

  const auto one = run_extraction(d, 1);
  CHECK(one.final.total() < Rational(1, 2));
  for (const auto& it : one.iterations) CHECK(it.tuple.size() == 1);

  const auto point = run_extraction(WeightedFamily::uniform(SetSystem(2, {{0}})), 2);
  CHECK(point.iterations.empty());
  CHECK(point.halt == HaltCause::NoTuple);

  const WeightedFamily half(SetSystem(2, {{0}, {1}}), {Rational(1, 2), Rational(1, 4)});
  CHECK_THROWS_AS((void)run_extraction(half, 2), InputError);
}

TEST_CASE("build_star") {
  const auto d = WeightedFamily::uniform(SetSystem(3, {{0}, {1}, {2}}));
  const auto t = run_extraction(d, 2);
  const auto star = build_star(t);
  CHECK(star.family.size() == 1);
  CHECK(star.distribution.weight(0) == 1);

  ProcessTrace manual;
  manual.r = 2;
  const ElementSet w1{0, 1}, w2{2, 3}, w3{4, 5};
  manual.iterations.push_back({{0, 1}, Rational(1, 4), w1, 1, Rational(1, 2)});
  manual.iterations.push_back({{2, 3}, Rational(1, 8), w2, Rational(1, 2), Rational(1, 4)});
  manual.iterations.push_back({{4, 5}, Rational(1, 8), w3, Rational(1, 4), 0});
  manual.initial = WeightedFamily::uniform(SetSystem(6, {{0}, {1}, {2}, {3}, {4}, {5}}));
  const auto s3 = build_star(manual);
  REQUIRE(s3.family.size() == 3);
  std::vector<Rational> ws = s3.distribution.weights();
  std::sort(ws.begin(), ws.end());
  CHECK(ws == std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 2)});

  manual.iterations[1].union_set = w1;
  manual.iterations[2].union_set = w1;
  const auto merged = build_star(manual);
  CHECK(merged.family.size() == 1);
  CHECK(merged.raw_mass[0] == Rational(1, 2));

  CHECK_THROWS_AS((void)build_star(ProcessTrace{}), InputError);
}

TEST_CASE("analyze_star") {
  const auto f = families::random_family(10, 3, 12, 21, true);
  const auto d = WeightedFamily::uniform(f);
  const auto t = run_extraction(d, 2);
  if (!t.iterations.empty()) {
    const auto star = build_star(t);
    // Every distribution is 1-regular, and none is 1000-regular on sets of size <= 6.
    CHECK(std::holds_alternative<RegularReport>(analyze_star(star, d, t, 1)));
    const auto big = analyze_star(star, d, t, 1000);
    REQUIRE(std::holds_alternative<StarAnalysis>(big));
    CHECK(std::get<StarAnalysis>(big).inequalities_hold());
  }
}

TEST_CASE("eta and cascade") {
  CHECK(eta_bound(2, 2) == 64);
  CHECK(eta_bound(3, 1) == 48);
  CHECK(eta_bound(3, 0) == 0);
  const std::map<int, Rational> eta{{1, 5}, {2, 100}};
  CHECK(power_of_two_cascade(2, eta) == 5);
  CHECK(power_of_two_cascade(3, eta) == 100);
  CHECK(power_of_two_cascade(4, eta) == 100);
  CHECK(power_of_two_cascade(3, {{1, 60}, {2, 100}}) == 120);
  CHECK_THROWS_AS((void)power_of_two_cascade(8, eta), InputError);
}

TEST_CASE("main theorem bound") {
  const auto zero = main_theorem_bound(8, 3, 0);
  CHECK(zero.prefactor == 48);
  CHECK(zero.bound.lo <= 48.0);
  CHECK(zero.bound.hi >= 48.0);
  const auto chain = main_theorem_bound(16, 4, 1);
  // log2(64) = 6, so the bound is 4 * 32 * 6^4.
  CHECK(chain.bound.lo <= 4.0 * 32 * 1296);
  CHECK(chain.bound.hi >= 4.0 * 32 * 1296);
  CHECK_THROWS_AS((void)main_theorem_bound(1, 2, 1), InputError);
}
