#pragma once

#include "helianthus/interval.hpp"
#include "helianthus/rational.hpp"
#include "helianthus/set_system.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace helianthus::eval {

using core::SetSystem;

/// Maps (F, eps) to a proper upper bound system for F whose width is at
/// most width(F) and whose satisfaction probability at p = 1/2 is within
/// eps of F's. The recursion checks all three properties on every call.
using CompressionOracle = std::function<SetSystem(const SetSystem&, const Rational&)>;

/// Returns its input unchanged.
[[nodiscard]] SetSystem identity_oracle(const SetSystem& family, const Rational& eps);

struct ExhaustiveOracleOptions {
  std::size_t node_budget = 5'000'000;
};

/// Smallest proper upper bound system F' with Pr[f'=1] - Pr[f=1] <= eps at
/// p = 1/2. Every member of F' is a subset of some member of F. Among
/// systems of minimum size, prefers fewer total elements, then the
/// lexicographically smallest sorted member list. The empty set is only used
/// when F already contains it.
///
/// Requires |F| <= 16 and universe <= 12 (InputError); throws ResourceError
/// once more than node_budget search nodes have been expanded.
[[nodiscard]] SetSystem exhaustive_compression_oracle(const SetSystem& family, const Rational& eps,
                                                      const ExhaustiveOracleOptions& options = {});

/// Constants for kappa0(w, eps) = ((log w)^2 / eps)^{c'} and the oracle
/// size exponent c.
struct RecursionParams {
  Rational c = 2;
  Rational c_prime = 24;
};

/// One step of the width-halving recursion. Probabilities are exact failure
/// probabilities Pr[f = 0] at p = 1/2.
struct RecursionLevel {
  int depth = 0;
  int w = 0;
  Rational eps;
  SetSystem family;
  Rational pr_f_zero;
  bool base_case = false;

  // Populated for non-base levels only.
  SetSystem f1, f2, f3, f4, f5;
  /// Rational upper bound on log2 w; exact when w is a power of two.
  Rational log_w_upper;
  Rational gamma;
  Rational eps_next;
  Rational pr_f1_zero, pr_f2_zero, pr_f3_zero, pr_f5_zero;
  /// Pr[f1 = 0] - Pr[f2 = 0], the price of replacing F1 by F2.
  Rational oracle_gap;
  /// F3 contains the empty set, so f3 is constant 1 and the recursion stops.
  bool f3_constant_true = false;

  bool chain_f_le_f3_plus_gap = false;
  bool chain_gap_le_gamma = false;
  bool chain_f3_le_f5 = false;
  bool sandwich_holds = false;  // Pr[f=0] <= Pr[f5=0] + gamma
  bool identity_holds = false;  // eps_next + gamma == eps

  Interval kappa0;
  Interval kappa0_next;
  /// ((log w) / gamma)^{c w}, the size promised by the compression conjecture.
  Interval f2_size_bound;
  /// |F4| * kappa0^{-w/2}, the bound on the mass a kappa0-regular
  /// distribution can put on F4.
  Interval f4_mass_bound;

  [[nodiscard]] bool all_checks_pass() const {
    return base_case || (chain_f_le_f3_plus_gap && chain_gap_le_gamma && chain_f3_le_f5 && sandwich_holds &&
                         identity_holds);
  }
};

struct RecursionTrace {
  std::vector<RecursionLevel> levels;
  [[nodiscard]] std::size_t depth() const { return levels.size(); }
  [[nodiscard]] bool all_checks_pass() const;
};

/// Runs the width-halving recursion on F: split off the large sets F1,
/// compress them with the oracle at error gamma = eps / log w, rebuild
/// F3 = (F \ F1) u F2, split F3 into large F4 and small F5, and recurse on
/// F5 with width floor(w/2) and error eps - gamma. Stops at w <= 2, when F3
/// contains the empty set, or after descending into an empty F5.
///
/// Throws InputError for a trivial F or eps outside (0, 1], and
/// OracleContractError when an oracle answer fails verification.
[[nodiscard]] RecursionTrace sandwich_recursion(const SetSystem& family, const Rational& eps,
                                                const CompressionOracle& oracle, const RecursionParams& params = {});

/// kappa0(w, eps) = ((log2 w)^2 / eps)^{c'} as an enclosing interval.
[[nodiscard]] Interval kappa0(int w, const Rational& eps, const Rational& c_prime);

struct ConditionCheck {
  Verdict verdict = Verdict::NotApplicable;
  Interval lhs;
  Interval rhs;
};

struct TauReport {
  int w = 0;
  int half = 0;
  /// tau(floor(w/2), eps(1 - 1/log w)) <= tau(w, eps), decided exactly.
  bool holds = false;
  bool equality = false;
  /// Interval evaluation of tau(w, eps) >= tau(half, eps'); NotApplicable at w = 2.
  Verdict numeric = Verdict::NotApplicable;
  Interval tau_w;
  Interval tau_half;
};

/// Throws InputError for w < 2 or eps <= 0.
[[nodiscard]] TauReport tau_check(int w, const Rational& eps);

struct Kappa0Report {
  int w = 0;
  Rational eps;
  Rational c;
  Rational c_prime;
  bool c_prime_at_least_12c = false;
  ConditionCheck cond_i;    // w <= 2 only
  ConditionCheck cond_ii;   // w >= 3 only
  ConditionCheck cond_iii;  // w >= 3 only
  TauReport tau;

  /// Every applicable condition passed rigorously and c' >= 12c.
  [[nodiscard]] bool all_pass() const;
};

/// Evaluates the three requirements on kappa0 for the given constants:
///   (i)   kappa0(w, eps) >= w (2^w log(1/eps))^2           for w <= 2
///   (ii)  kappa0(w, eps) >= ((log w) / eps)^{12c}           for w >= 3
///   (iii) kappa0(w, eps) >= kappa0(w/2, eps(1-1/log w)) + 1  for w >= 3
/// Throws InputError for w < 1 or eps outside (0, 1).
[[nodiscard]] Kappa0Report kappa0_conditions(int w, const Rational& eps, const Rational& c, const Rational& c_prime);

}  // namespace helianthus::eval
