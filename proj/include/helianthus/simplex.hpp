#pragma once

#include "helianthus/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace helianthus::regular {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // one per structural variable
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;  // valid when Optimal
  Rational objective;
  std::size_t pivots = 0;
};

inline constexpr std::size_t kDefaultPivotBudget = 200000;

/// maximize  objective . x   subject to  constraints,  x >= 0.
///
/// Dense two-phase tableau simplex over exact rationals with Bland's rule,
/// so it cannot cycle. An empty `objective` means pure feasibility.
/// Throws ResourceError when more than `pivot_budget` pivots are needed.
LpResult solve_lp(std::size_t num_vars, std::span<const LinearConstraint> constraints,
                  std::span<const Rational> objective = {}, std::size_t pivot_budget = kDefaultPivotBudget);

}  // namespace helianthus::regular
