#include "helianthus/eval.hpp"

#include "helianthus/errors.hpp"
#include "helianthus/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

namespace helianthus::eval {

namespace {

using Terms = std::vector<std::uint64_t>;

/// Keeps only inclusion-minimal terms, sorted ascending: the canonical
/// antichain of a monotone DNF.
Terms canonical(Terms terms) {
  std::sort(terms.begin(), terms.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  Terms kept;
  for (const std::uint64_t t : terms)
    if (std::none_of(kept.begin(), kept.end(), [t](std::uint64_t k) { return (k & ~t) == 0; })) kept.push_back(t);
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// Splits terms into groups with pairwise disjoint variable supports.
std::vector<Terms> components(const Terms& terms) {
  std::vector<std::uint64_t> supports;
  std::vector<Terms> groups;
  for (const std::uint64_t t : terms) {
    std::uint64_t merged = t;
    Terms group{t};
    for (std::size_t g = 0; g < supports.size();) {
      if (supports[g] & merged) {
        merged |= supports[g];
        group.insert(group.end(), groups[g].begin(), groups[g].end());
        supports.erase(supports.begin() + static_cast<std::ptrdiff_t>(g));
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(g));
        g = 0;
      } else {
        ++g;
      }
    }
    supports.push_back(merged);
    groups.push_back(std::move(group));
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

class FailureProbability {
 public:
  explicit FailureProbability(Rational p) : p_(std::move(p)), q_(1 - p_) {}

  /// Pr[f = 0] for canonical terms.
  Rational operator()(const Terms& terms) {
    if (terms.empty()) return 1;
    if (terms.front() == 0) return 0;
    if (terms.size() == 1) return 1 - helianthus::pow(p_, static_cast<unsigned>(std::popcount(terms.front())));
    if (auto it = memo_.find(terms); it != memo_.end()) return it->second;

    Rational result;
    auto parts = components(terms);
    if (parts.size() > 1) {
      result = 1;
      for (const auto& part : parts) result *= (*this)(part);
    } else {
      const int e = most_frequent(terms);
      const std::uint64_t bit = std::uint64_t{1} << e;
      Terms on, off;
      for (const std::uint64_t t : terms) {
        on.push_back(t & ~bit);
        if (!(t & bit)) off.push_back(t);
      }
      result = p_ * (*this)(canonical(std::move(on))) + q_ * (*this)(canonical(std::move(off)));
    }
    memo_.emplace(terms, result);
    return result;
  }

 private:
  static int most_frequent(const Terms& terms) {
    int best = -1, best_count = -1;
    for (int e = 0; e < core::kMaxUniverse; ++e) {
      int count = 0;
      for (const std::uint64_t t : terms) count += static_cast<int>((t >> e) & 1U);
      if (count > best_count) {
        best = e;
        best_count = count;
      }
    }
    return best;
  }

  Rational p_;
  Rational q_;
  std::map<Terms, Rational> memo_;
};

Terms masks_of(const SetSystem& family) {
  Terms out;
  out.reserve(family.size());
  for (const ElementSet s : family) out.push_back(s.mask());
  return out;
}

}  // namespace

BiasedMeasure::BiasedMeasure(Rational p) : p_(std::move(p)) {
  p_.canonicalize();
  if (p_ <= 0 || p_ >= 1) throw InputError("bias p must lie strictly between 0 and 1, got " + to_string(p_));
}

Rational satisfaction_probability(const SetSystem& family, const BiasedMeasure& measure) {
  FailureProbability failure(measure.p());
  return 1 - failure(canonical(masks_of(family)));
}

Rational satisfaction_probability(const SetSystem& family, const Rational& p) {
  return satisfaction_probability(family, BiasedMeasure(p));
}

bool is_satisfying(const SetSystem& family, const Rational& p, const Rational& eps) {
  return satisfaction_probability(family, p) > 1 - eps;
}

MonteCarloEstimate monte_carlo_satisfaction(const SetSystem& family, const Rational& p, std::uint64_t trials,
                                            std::uint64_t seed, Execution execution) {
  const BiasedMeasure measure(p);
  if (trials == 0) throw InputError("monte carlo needs at least one trial");
  const auto terms = masks_of(family);
  const kernels::MonteCarloConfig config{measure.p().get_d(), trials, seed, family.universe_size()};
  MonteCarloEstimate out;
  out.trials = trials;
  out.hits = execution == Execution::Parallel ? kernels::monte_carlo_hits_omp(terms, config)
                                              : kernels::monte_carlo_hits_serial(terms, config);
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
  return out;
}

ApproxSunflowerCheck is_approx_sunflower(const SetSystem& family, const Rational& p, const Rational& eps) {
  ApproxSunflowerCheck out;
  out.core = core::core_intersection(family);
  out.residual = core::link(family, out.core);
  out.degenerate = out.residual.contains(ElementSet());
  out.probability = satisfaction_probability(out.residual, p);
  out.holds = out.probability > 1 - eps;
  return out;
}

std::optional<ApproxSunflowerMatch> find_approx_sunflower(const SetSystem& family, const Rational& p,
                                                          const Rational& eps, FinderMode mode) {
  auto attempt = [&](std::vector<std::size_t> idx) -> std::optional<ApproxSunflowerMatch> {
    std::vector<ElementSet> sets;
    for (const std::size_t i : idx) sets.push_back(family[i]);
    SetSystem sub(family.universe_size(), std::move(sets));
    auto check = is_approx_sunflower(sub, p, eps);
    if (!check.holds) return std::nullopt;
    return ApproxSunflowerMatch{std::move(idx), std::move(sub), std::move(check)};
  };

  if (mode == FinderMode::LinkSearch) {
    std::vector<ElementSet> candidates{ElementSet()};
    {
      std::vector<ElementSet> rest;
      for (const ElementSet s : family)
        core::for_each_subset(s, [&](ElementSet t) {
          if (!t.empty()) rest.push_back(t);
        });
      std::sort(rest.begin(), rest.end(),
                [](ElementSet a, ElementSet b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
      rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
      candidates.insert(candidates.end(), rest.begin(), rest.end());
    }
    for (const ElementSet t : candidates) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < family.size(); ++i)
        if (t.subset_of(family[i])) idx.push_back(i);
      if (idx.size() < 2) continue;
      if (auto hit = attempt(std::move(idx))) return hit;
    }
    return std::nullopt;
  }

  if (family.size() > 20) throw InputError("exhaustive approximate-sunflower search needs |F| <= 20");
  const std::size_t n = family.size();
  for (std::size_t k = n; k >= 2; --k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (auto hit = attempt(idx)) return hit;
      // next k-combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace helianthus::eval
