#include "helianthus/regular.hpp"

#include "helianthus/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace helianthus::regular {

namespace {

constexpr int kMaxEnumeratedWidth = 30;

void require_enumerable(const SetSystem& family) {
  if (family.width() > kMaxEnumeratedWidth)
    throw ResourceError("width " + std::to_string(family.width()) + " too large to enumerate subsets");
}

/// kappa^t for t = 0..max_t.
std::vector<Rational> powers(const Rational& kappa, int max_t) {
  std::vector<Rational> out(static_cast<std::size_t>(max_t) + 1);
  out[0] = 1;
  for (int t = 1; t <= max_t; ++t) out[static_cast<std::size_t>(t)] = out[static_cast<std::size_t>(t) - 1] * kappa;
  return out;
}

bool pairwise_intersecting(const SetSystem& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!f[i].intersects(f[j])) return false;
  return true;
}

}  // namespace

WeightedFamily::WeightedFamily(SetSystem family, std::vector<Rational> weights)
    : family_(std::move(family)), weights_(std::move(weights)) {
  if (weights_.size() != family_.size())
    throw InputError("weight count " + std::to_string(weights_.size()) + " does not match family size " +
                     std::to_string(family_.size()));
  for (const auto& w : weights_)
    if (w < 0) throw InputError("negative weight " + to_string(w));
}

WeightedFamily WeightedFamily::uniform(const SetSystem& family) {
  if (family.empty()) throw InputError("uniform distribution on an empty family");
  const Rational each(1, static_cast<unsigned long>(family.size()));
  return WeightedFamily(family, std::vector<Rational>(family.size(), each));
}

Rational WeightedFamily::total() const {
  Rational sum;
  for (const auto& w : weights_) sum += w;
  return sum;
}

bool WeightedFamily::is_distribution() const {
  if (total() != 1) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (weights_[i] > 0 && family_[i].empty()) return false;
  return true;
}

Rational subset_mass(const WeightedFamily& d, ElementSet t) {
  Rational mass;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (t.subset_of(d.family()[i])) mass += d.weight(i);
  return mass;
}

std::vector<std::pair<ElementSet, Rational>> all_subset_masses(const WeightedFamily& d) {
  require_enumerable(d.family());
  std::map<std::uint64_t, Rational> acc;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.weight(i) == 0) continue;
    core::for_each_subset(d.family()[i], [&](ElementSet t) {
      if (!t.empty()) acc[t.mask()] += d.weight(i);
    });
  }
  std::vector<std::pair<ElementSet, Rational>> out;
  out.reserve(acc.size());
  for (auto& [mask, mass] : acc) out.emplace_back(ElementSet(mask), std::move(mass));
  return out;
}

RegularityCertificate is_kappa_regular(const WeightedFamily& d, const Rational& kappa) {
  if (kappa <= 0) throw InputError("kappa must be positive");
  if (d.total() != 1) throw InputError("weights do not form a distribution (total " + to_string(d.total()) + ")");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.weight(i) > 0 && d.family()[i].empty())
      throw InputError("distribution supported on the empty set has unbounded regularity");

  const auto kp = powers(kappa, d.family().width());
  std::optional<Violation> worst;
  Rational worst_score;
  for (const auto& [t, mass] : all_subset_masses(d)) {
    Rational score = mass * kp[static_cast<std::size_t>(t.size())];
    if (score <= 1) continue;
    bool better = !worst;
    if (worst) {
      const int ts = t.size(), ws = worst->t.size();
      better = ts < ws || (ts == ws && (score > worst_score || (score == worst_score && t < worst->t)));
    }
    if (better) {
      worst = Violation{t, mass};
      worst_score = std::move(score);
    }
  }
  if (worst) return *worst;
  return Regular{d};
}

RegularityCertificate certify_family(const SetSystem& family, const Rational& kappa, const CertifyOptions& options) {
  if (!core::is_non_trivial(family)) throw InputError("certify_family requires a non-trivial family");
  if (kappa <= 0) throw InputError("kappa must be positive");
  require_enumerable(family);

  const std::size_t m = family.size();
  const auto kp = powers(kappa, family.width());
  std::vector<ElementSet> active;
  for (const int e : family.support().indices()) active.push_back(ElementSet{e});

  auto row_for = [&](ElementSet t) {
    LinearConstraint c;
    c.coeffs.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (t.subset_of(family[i])) c.coeffs[i] = 1;
    c.sense = Sense::LessEqual;
    c.rhs = 1 / kp[static_cast<std::size_t>(t.size())];
    return c;
  };

  std::vector<LinearConstraint> rows;
  {
    LinearConstraint total;
    total.coeffs.assign(m, Rational(1));
    total.sense = Sense::Equal;
    total.rhs = 1;
    rows.push_back(std::move(total));
  }
  for (const ElementSet t : active) rows.push_back(row_for(t));

  std::size_t budget = options.pivot_budget;
  while (true) {
    const LpResult lp = solve_lp(m, rows, {}, budget);
    budget -= std::min(budget, lp.pivots);
    if (lp.status == LpStatus::Infeasible) return Infeasible{active};

    WeightedFamily candidate(family, lp.x);
    std::vector<ElementSet> violated;
    for (const auto& [t, mass] : all_subset_masses(candidate))
      if (mass * kp[static_cast<std::size_t>(t.size())] > 1) violated.push_back(t);
    if (violated.empty()) {
      if (!is_regular(is_kappa_regular(candidate, kappa)))
        throw std::logic_error("certify_family produced a witness that fails re-verification");
      return Regular{std::move(candidate)};
    }
    for (const ElementSet t : violated) {
      active.push_back(t);
      rows.push_back(row_for(t));
    }
  }
}

RegularityBracket max_regularity(const SetSystem& family, const Rational& tol, const CertifyOptions& options) {
  if (tol <= 0) throw InputError("tolerance must be positive");
  RegularityBracket bracket;

  auto probe = [&](const Rational& kappa) {
    ++bracket.lp_calls;
    return certify_family(family, kappa, options);
  };

  bracket.lo = 1;
  {
    auto at_one = probe(bracket.lo);
    if (!is_regular(at_one)) throw std::logic_error("every family is 1-regular");
    bracket.lo_witness = std::get<Regular>(std::move(at_one)).witness;
  }
  // Some element lies in >= E|S| / n' >= 1/n' of the mass, so kappa* <= n'.
  const int spread = family.support().size();
  if (pairwise_intersecting(family)) {
    bracket.hi = family.width();
    bracket.hi_is_cap = true;
  } else {
    bracket.hi = spread + 1;
    if (is_regular(probe(bracket.hi))) throw std::logic_error("regularity above the universe bound");
  }

  while (bracket.hi - bracket.lo > tol) {
    const Rational third = (bracket.hi - bracket.lo) / 3;
    const Rational kappa = simplest_between(bracket.lo + third, bracket.hi - third);
    auto cert = probe(kappa);
    if (auto* reg = std::get_if<Regular>(&cert)) {
      bracket.lo = kappa;
      bracket.lo_witness = std::move(reg->witness);
    } else {
      bracket.hi = kappa;
      bracket.hi_is_cap = false;
    }
  }
  return bracket;
}

std::optional<HeavySet> heavy_set(const SetSystem& family, const Rational& kappa) {
  if (family.empty()) throw InputError("heavy_set of an empty family");
  if (kappa <= 1) throw InputError("heavy_set requires kappa > 1");
  require_enumerable(family);

  std::unordered_map<std::uint64_t, std::size_t> counts;
  for (const ElementSet s : family)
    core::for_each_subset(s, [&](ElementSet t) {
      if (!t.empty()) ++counts[t.mask()];
    });

  const auto kp = powers(kappa, family.width());
  std::optional<HeavySet> best;
  Rational best_score;
  for (const auto& [mask, count] : counts) {
    const ElementSet t(mask);
    Rational score = Rational(static_cast<unsigned long>(count)) * kp[static_cast<std::size_t>(t.size())];
    bool better = !best || score > best_score;
    if (best && score == best_score)
      better = t.size() < best->t.size() || (t.size() == best->t.size() && t < best->t);
    if (better) {
      best = HeavySet{t, count};
      best_score = std::move(score);
    }
  }
  if (best && best_score > Rational(static_cast<unsigned long>(family.size()))) return best;
  return std::nullopt;
}

WeightedFamily pushforward_upper(const WeightedFamily& d, std::span<const ElementSet> images) {
  if (images.size() != d.size()) throw InputError("pushforward map must give one image per member");
  std::vector<ElementSet> targets;
  std::vector<Rational> mass;
  std::unordered_map<std::uint64_t, std::size_t> slot;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const ElementSet img = images[i];
    if (img.empty()) throw InputError("pushforward image of " + d.family()[i].to_string() + " is empty");
    if (!img.subset_of(d.family()[i]))
      throw InputError("pushforward image " + img.to_string() + " is not inside " + d.family()[i].to_string());
    auto [it, inserted] = slot.try_emplace(img.mask(), targets.size());
    if (inserted) {
      targets.push_back(img);
      mass.emplace_back(0);
    }
    mass[it->second] += d.weight(i);
  }
  return WeightedFamily(SetSystem(d.family().universe_size(), std::move(targets)), std::move(mass));
}

Conditioned condition(const WeightedFamily& d, const SetSystem& sub) {
  Conditioned out;
  std::vector<Rational> weights;
  weights.reserve(sub.size());
  for (const ElementSet s : sub) {
    const auto idx = d.family().index_of(s);
    if (!idx) throw InputError("conditioning set " + s.to_string() + " is not in the support family");
    weights.push_back(d.weight(*idx));
    out.alpha += d.weight(*idx);
  }
  if (out.alpha == 0) throw InputError("conditioning on a zero-mass subfamily");
  for (auto& w : weights) w /= out.alpha;
  out.distribution = WeightedFamily(SetSystem(d.family().universe_size(), sub.sets()), std::move(weights));
  return out;
}

}  // namespace helianthus::regular
