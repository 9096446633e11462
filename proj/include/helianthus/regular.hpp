#pragma once

#include "helianthus/rational.hpp"
#include "helianthus/set_system.hpp"
#include "helianthus/simplex.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace helianthus::regular {

using core::ElementSet;
using core::SetSystem;

/// Non-negative exact weights, one per member of a SetSystem. Models a
/// distribution D (total 1) as well as the sub-distributions D_i of the
/// extraction process.
class WeightedFamily {
 public:
  WeightedFamily() = default;
  /// Throws InputError on a size mismatch or a negative weight.
  WeightedFamily(SetSystem family, std::vector<Rational> weights);

  static WeightedFamily uniform(const SetSystem& family);

  [[nodiscard]] const SetSystem& family() const { return family_; }
  [[nodiscard]] const std::vector<Rational>& weights() const { return weights_; }
  [[nodiscard]] const Rational& weight(std::size_t i) const { return weights_[i]; }
  [[nodiscard]] std::size_t size() const { return weights_.size(); }
  [[nodiscard]] Rational total() const;

  /// Total exactly 1 and no positive weight on the empty set.
  [[nodiscard]] bool is_distribution() const;

  bool operator==(const WeightedFamily&) const = default;

 private:
  SetSystem family_;
  std::vector<Rational> weights_;
};

/// Sum of weights of members containing t (the total mass when t is empty).
[[nodiscard]] Rational subset_mass(const WeightedFamily& d, ElementSet t);

/// Mass of every non-empty T contained in some positively weighted member.
/// All other T have mass zero. Ordered by mask.
[[nodiscard]] std::vector<std::pair<ElementSet, Rational>> all_subset_masses(const WeightedFamily& d);

struct Regular {
  WeightedFamily witness;
};
/// mass * kappa^|t| > 1: the distribution puts too much weight above t.
struct Violation {
  ElementSet t;
  Rational mass;
};
/// The family LP is infeasible. `binding` lists the T-constraints of the
/// final relaxation that was already infeasible (diagnostic only; not a
/// Farkas certificate).
struct Infeasible {
  std::vector<ElementSet> binding;
};

using RegularityCertificate = std::variant<Regular, Violation, Infeasible>;

[[nodiscard]] inline bool is_regular(const RegularityCertificate& c) { return std::holds_alternative<Regular>(c); }

/// Exact check of Pr_{S~D}[T subset of S] <= kappa^-|T| for every T.
///
/// On failure returns a Violation whose T has the fewest elements among the
/// violating sets, then the largest mass * kappa^|T|, then comes first
/// lexicographically. Throws InputError if D is not a distribution, puts
/// mass on the empty set, or kappa <= 0.
[[nodiscard]] RegularityCertificate is_kappa_regular(const WeightedFamily& d, const Rational& kappa);

struct CertifyOptions {
  std::size_t pivot_budget = kDefaultPivotBudget;
};

/// Decides whether some kappa-regular distribution is supported on F by
/// solving the exact LP  x >= 0, sum x = 1, sum_{S containing T} x_S <=
/// kappa^-|T|  with lazily generated T-rows. A Regular answer carries the
/// LP solution as witness, already re-verified by is_kappa_regular.
/// Throws InputError for a trivial family or kappa <= 0; ResourceError when
/// the pivot budget (cumulative over all rounds) runs out.
[[nodiscard]] RegularityCertificate certify_family(const SetSystem& family, const Rational& kappa,
                                                   const CertifyOptions& options = {});

struct RegularityBracket {
  Rational lo;  // certified feasible; witness carried below
  Rational hi;  // certified infeasible, or the intersecting-family cap w
  WeightedFamily lo_witness;
  bool hi_is_cap = false;
  std::size_t lp_calls = 0;
};

/// Brackets kappa* = sup{kappa : F is kappa-regular} inside [lo, hi] with
/// hi - lo <= tol. Probes the simplest rational in the middle third of the
/// current bracket, so exact values with small denominators are hit early.
[[nodiscard]] RegularityBracket max_regularity(const SetSystem& family, const Rational& tol,
                                               const CertifyOptions& options = {});

struct HeavySet {
  ElementSet t;
  std::size_t count = 0;
};

/// The non-empty T maximising |{S : T subset of S}| * kappa^|T|, provided that
/// score strictly exceeds |F| (so the uniform distribution violates
/// kappa-regularity at T). Ties: larger score, then smaller |T|, then
/// lexicographic T. Throws InputError if F is empty or kappa <= 1.
[[nodiscard]] std::optional<HeavySet> heavy_set(const SetSystem& family, const Rational& kappa);

/// Push-forward of D along S -> images[S-index]. Each image must be a
/// non-empty subset of its preimage. The result lives on the distinct
/// images in first-occurrence order.
[[nodiscard]] WeightedFamily pushforward_upper(const WeightedFamily& d, std::span<const ElementSet> images);

struct Conditioned {
  WeightedFamily distribution;
  Rational alpha;
};

/// Restriction of D to the members listed in `sub`, renormalised by
/// alpha = D(sub). Throws InputError if `sub` is not a subfamily or alpha = 0.
[[nodiscard]] Conditioned condition(const WeightedFamily& d, const SetSystem& sub);

}  // namespace helianthus::regular
