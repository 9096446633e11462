#pragma once

#include "helianthus/rational.hpp"
#include "helianthus/set_system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace helianthus::eval {

using core::ElementSet;
using core::SetSystem;

/// The p-biased product measure X_p; p is kept strictly inside (0, 1).
class BiasedMeasure {
 public:
  explicit BiasedMeasure(Rational p);
  [[nodiscard]] const Rational& p() const { return p_; }

 private:
  Rational p_;
};

/// Exact Pr_{W ~ X_p}[some member of F is inside W].
///
/// Conditions on the most frequent element (lowest index on ties), splits
/// variable-disjoint components into a product, and memoises on the
/// canonical antichain of each subproblem.
[[nodiscard]] Rational satisfaction_probability(const SetSystem& family, const BiasedMeasure& measure);
[[nodiscard]] Rational satisfaction_probability(const SetSystem& family, const Rational& p);

/// satisfaction_probability > 1 - eps (strict).
[[nodiscard]] bool is_satisfying(const SetSystem& family, const Rational& p, const Rational& eps);

enum class Execution { Serial, Parallel };

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
};

/// Unbiased sampling estimate; identical for a given seed regardless of
/// Execution or thread count.
[[nodiscard]] MonteCarloEstimate monte_carlo_satisfaction(const SetSystem& family, const Rational& p,
                                                          std::uint64_t trials, std::uint64_t seed,
                                                          Execution execution = Execution::Parallel);

struct ApproxSunflowerCheck {
  bool holds = false;
  /// Residual contains the empty set (single-set input): probability 1.
  bool degenerate = false;
  ElementSet core;
  SetSystem residual;
  Rational probability;
};

/// Strips K = core_intersection(F) and tests whether {S \ K} is
/// (p, eps)-satisfying. Throws InputError on an empty family.
[[nodiscard]] ApproxSunflowerCheck is_approx_sunflower(const SetSystem& family, const Rational& p,
                                                       const Rational& eps);

enum class FinderMode { LinkSearch, Exhaustive };

struct ApproxSunflowerMatch {
  std::vector<std::size_t> indices;  // into the input family, ascending
  SetSystem subfamily;
  ApproxSunflowerCheck check;
};

/// LinkSearch tries F_T = {S : T subset of S} for T = {} and then every T
/// inside some member, ordered by |T| then lexicographically. Exhaustive
/// tries every subfamily, largest first (requires |F| <= 20). Only
/// subfamilies of size >= 2 are considered.
[[nodiscard]] std::optional<ApproxSunflowerMatch> find_approx_sunflower(const SetSystem& family, const Rational& p,
                                                                        const Rational& eps, FinderMode mode);

}  // namespace helianthus::eval
