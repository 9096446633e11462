#pragma once

#include "helianthus/interval.hpp"
#include "helianthus/rational.hpp"
#include "helianthus/regular.hpp"

#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace helianthus::process {

using core::ElementSet;
using core::SetSystem;
using regular::WeightedFamily;

/// Picks r pairwise disjoint members with positive current mass, as indices
/// into `family`, or nothing if none exist.
using TupleFinder =
    std::function<std::optional<std::vector<std::size_t>>(const SetSystem& family, const std::vector<Rational>& mass, int r)>;

/// Lexicographically first index tuple among positive-mass members (exact
/// backtracking).
[[nodiscard]] TupleFinder exact_finder();

struct Iteration {
  std::vector<std::size_t> tuple;  // ascending
  Rational delta;                  // smallest current mass in the tuple
  ElementSet union_set;            // W_i
  Rational mass_before;
  Rational mass_after;
};

enum class HaltCause { MassBelowHalf, NoTuple };

[[nodiscard]] const char* to_string(HaltCause cause);

struct ProcessTrace {
  int r = 0;
  WeightedFamily initial;
  WeightedFamily final;
  std::vector<Iteration> iterations;
  HaltCause halt = HaltCause::MassBelowHalf;

  [[nodiscard]] Rational delta_total() const;
};

/// While the remaining mass is at least 1/2, removes delta = min mass from
/// r pairwise disjoint positive-mass members chosen by `finder`.
/// Throws InputError if D is not a distribution or r < 1, and
/// std::logic_error if the finder returns an invalid tuple.
[[nodiscard]] ProcessTrace run_extraction(const WeightedFamily& d, int r, const TupleFinder& finder = exact_finder());

struct StarSystem {
  /// Distinct W_i in first-occurrence order.
  SetSystem family;
  /// Sum of delta_i over iterations producing each W.
  std::vector<Rational> raw_mass;
  Rational delta_total;
  /// raw_mass / delta_total.
  WeightedFamily distribution;
  /// For each iteration, the index of its W_i in `family`.
  std::vector<std::size_t> member_of_iteration;
};

/// Throws InputError on a trace without iterations.
[[nodiscard]] StarSystem build_star(const ProcessTrace& trace);

/// The normalised star distribution is beta-regular; no contradiction.
struct RegularReport {
  Rational beta;
};

struct StarAnalysis {
  ElementSet t;  // violating set for D*
  int t_size = 0;
  Rational star_mass;  // D*-mass above t
  /// Iterations i with t inside W_i.
  std::vector<std::size_t> iterations_above_t;
  /// For each such iteration: position j_i in the tuple and T_i = t & S_{i, j_i}.
  std::vector<std::size_t> j;
  std::vector<ElementSet> t_parts;
  ElementSet t_star;
  Rational delta_above_t;       // sum of delta_i over I
  Rational delta_at_t_star;     // sum over i in I with T_i = T*
  Rational delta_t_star_inside; // sum over i in I with T* inside S_{i, j_i}
  Rational original_mass_above_t_star;

  // Recorded inequalities, each decided exactly.
  bool a_star_violation = false;  // delta_above_t >= delta * beta^-t
  bool b_majority = false;        // delta_at_t_star >= 2^-t * delta_above_t
  bool c_t_star_size = false;     // r |T*| >= t
  bool d_telescoping = false;     // for every S: sum_{i in I(S)} delta_i <= D(S)
  /// original mass above T* >= delta / (2 beta)^t; normalisation independent.
  bool chain_holds = false;
  /// original mass above T* >= 1 / (2r (2 beta)^t); needs delta >= 1/(2r).
  bool chain_unit_holds = false;

  Rational base_bound;  // 2r (2 beta)^t
  Rational eta_cap;     // 2r (2 beta)^r
  Interval kappa_cap;   // (2r (2 beta)^t)^{1/|T*|}
  /// Largest kappa compatible with the original D at T*: mass^{-1/|T*|}.
  Interval kappa_from_d;

  [[nodiscard]] bool inequalities_hold() const {
    return a_star_violation && b_majority && c_t_star_size && d_telescoping && chain_holds;
  }
};

using StarOutcome = std::variant<RegularReport, StarAnalysis>;

/// Looks for a beta-regularity violation of D*; if one exists, runs the
/// majority-piece argument against the original distribution.
/// Throws InputError for beta <= 0.
[[nodiscard]] StarOutcome analyze_star(const StarSystem& star, const WeightedFamily& original, const ProcessTrace& trace,
                                       const Rational& beta);

/// r 2^{r+1} beta^r.
[[nodiscard]] Rational eta_bound(int r, const Rational& beta);

/// Bound on alpha(w, r) from eta(w, .) at powers of two: with s the
/// smallest power of two >= r, returns max_k 2^{k-1} eta(w, s / 2^k) over
/// 1 <= k <= log2 s. Throws InputError for r < 2 or a missing eta value.
[[nodiscard]] Rational power_of_two_cascade(int r, const std::map<int, Rational>& eta);

struct MainBoundReport {
  Interval log_w;
  Interval log_wr;
  Rational prefactor;  // r 2^{r+1}
  Interval bound;      // r 2^{r+1} (log wr)^{c r}
  /// c_r with (log w)^{c_r} = bound; only when log log w > 0.
  std::optional<Interval> c_r;
  /// (log w)^{c_r w} = bound^w.
  Interval size_threshold;
};

/// Throws InputError for w < 2, r < 1 or c < 0.
[[nodiscard]] MainBoundReport main_theorem_bound(int w, int r, const Rational& c);

}  // namespace helianthus::process
