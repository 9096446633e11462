#include "helianthus/sunflower.hpp"

#include "helianthus/errors.hpp"
#include "helianthus/kernels.hpp"
#include "helianthus/random.hpp"
#include "helianthus/regular.hpp"

#include <algorithm>
#include <set>

namespace helianthus::sunflower {

namespace {

class DisjointSearch {
 public:
  DisjointSearch(const std::vector<ElementSet>& sets, int r, std::size_t budget)
      : sets_(sets), r_(static_cast<std::size_t>(r)), budget_(budget) {}

  std::optional<std::vector<std::size_t>> run() {
    if (descend(0, ElementSet())) return chosen_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t from, ElementSet used) {
    if (chosen_.size() == r_) return true;
    if (++nodes_ > budget_) throw ResourceError("disjoint-set search exceeded its node budget");
    for (std::size_t i = from; i + (r_ - chosen_.size()) <= sets_.size(); ++i) {
      if (sets_[i].intersects(used)) continue;
      chosen_.push_back(i);
      if (descend(i + 1, used | sets_[i])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<ElementSet>& sets_;
  std::size_t r_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
};

std::optional<std::vector<std::size_t>> greedy_disjoint(const std::vector<ElementSet>& sets, int r) {
  std::vector<std::size_t> open(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) open[i] = i;
  std::vector<std::size_t> chosen;
  while (chosen.size() < static_cast<std::size_t>(r) && !open.empty()) {
    std::size_t best = open.front();
    std::size_t best_conflicts = sets.size() + 1;
    for (const std::size_t i : open) {
      std::size_t conflicts = 0;
      for (const std::size_t j : open)
        if (j != i && sets[i].intersects(sets[j])) ++conflicts;
      if (conflicts < best_conflicts) {
        best = i;
        best_conflicts = conflicts;
      }
    }
    chosen.push_back(best);
    std::erase_if(open, [&](std::size_t j) { return j == best || sets[j].intersects(sets[best]); });
  }
  if (chosen.size() < static_cast<std::size_t>(r)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

void require_extractable(const SetSystem& family, int r) {
  if (r < 2) throw InputError("sunflower extraction needs r >= 2");
  if (!core::is_non_trivial(family)) throw InputError("sunflower extraction needs a non-trivial family");
  if (!core::is_non_redundant(family)) throw InputError("sunflower extraction needs a non-redundant family");
}

/// Members of the current restricted family, each remembering which input
/// member it came from.
struct Restricted {
  std::vector<ElementSet> residuals;
  std::vector<std::size_t> origin;
  ElementSet core;

  void restrict_to(ElementSet t) {
    std::vector<ElementSet> next;
    std::vector<std::size_t> next_origin;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      if (!t.subset_of(residuals[i])) continue;
      next.push_back(residuals[i] - t);
      next_origin.push_back(origin[i]);
    }
    residuals = std::move(next);
    origin = std::move(next_origin);
    core = core | t;
  }

  SunflowerCertificate certificate(const std::vector<std::size_t>& local) const {
    SunflowerCertificate cert{core, {}};
    for (const std::size_t i : local) cert.petal_indices.push_back(origin[i]);
    return cert;
  }
};

Restricted start(const SetSystem& family) {
  Restricted out;
  out.residuals = family.sets();
  for (std::size_t i = 0; i < family.size(); ++i) out.origin.push_back(i);
  return out;
}

bool exhausted(const Restricted& state) {
  return state.residuals.empty() || (state.residuals.size() == 1 && state.residuals.front().empty());
}

int most_frequent_in(const std::vector<ElementSet>& sets, ElementSet candidates) {
  int best = -1;
  std::size_t best_count = 0;
  for (const int e : candidates.indices()) {
    const auto count = static_cast<std::size_t>(
        std::count_if(sets.begin(), sets.end(), [e](ElementSet s) { return s.contains(e); }));
    if (best < 0 || count > best_count) {
      best = e;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

bool verify_sunflower(const SetSystem& family, const SunflowerCertificate& cert) {
  const auto& idx = cert.petal_indices;
  if (idx.size() < 2) return false;
  if (std::set<std::size_t>(idx.begin(), idx.end()).size() != idx.size()) return false;
  if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= family.size(); })) return false;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (!((family[idx[a]] & family[idx[b]]) == cert.core)) return false;
  return true;
}

std::optional<std::vector<std::size_t>> find_disjoint(const SetSystem& family, int r, DisjointMode mode,
                                                      const SearchOptions& options) {
  if (r < 1) throw InputError("find_disjoint needs r >= 1");
  if (mode == DisjointMode::Greedy) return greedy_disjoint(family.sets(), r);
  return DisjointSearch(family.sets(), r, options.node_budget).run();
}

bool is_intersecting(const SetSystem& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!family[i].intersects(family[j])) return false;
  return true;
}

std::optional<ColoringHit> coloring_search(const SetSystem& family, int r, std::uint64_t seed,
                                           std::uint64_t max_tries) {
  if (r < 1) throw InputError("coloring search needs r >= 1");
  if (!core::is_non_trivial(family)) throw InputError("coloring search needs a non-trivial family");
  const int n = family.universe_size();

  auto match = [&](const std::vector<int>& coloring) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::uint64_t> cls(static_cast<std::size_t>(r), 0);
    for (int e = 0; e < n; ++e) cls[static_cast<std::size_t>(coloring[static_cast<std::size_t>(e)])] |= std::uint64_t{1} << e;
    std::vector<std::size_t> picked;
    for (const std::uint64_t c : cls) {
      const auto it = std::find_if(family.begin(), family.end(), [c](ElementSet s) { return s.subset_of(ElementSet(c)); });
      if (it == family.end()) return std::nullopt;
      picked.push_back(static_cast<std::size_t>(it - family.begin()));
    }
    return picked;
  };

  std::vector<int> coloring(static_cast<std::size_t>(n));
  for (std::uint64_t k = 0; k < max_tries; ++k) {
    Rng rng(derive_seed(seed, k));
    for (auto& c : coloring) c = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(r)));
    if (auto picked = match(coloring)) return ColoringHit{std::move(*picked), coloring, false, k + 1};
  }

  if (n > 16) return std::nullopt;
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) {
    space *= static_cast<std::uint64_t>(r);
    if (space > (std::uint64_t{1} << 32)) return std::nullopt;
  }
  std::vector<std::uint64_t> terms;
  for (const ElementSet s : family) terms.push_back(s.mask());
  const auto code = kernels::first_good_coloring_omp(terms, n, r);
  if (!code) return std::nullopt;
  std::uint64_t rest = *code;
  for (auto& c : coloring) {
    c = static_cast<int>(rest % static_cast<std::uint64_t>(r));
    rest /= static_cast<std::uint64_t>(r);
  }
  auto picked = match(coloring);
  return ColoringHit{std::move(*picked), coloring, true, max_tries};
}

ExtractionReport erdos_rado_extract(const SetSystem& family, int r, const SearchOptions& options) {
  require_extractable(family, r);
  ExtractionReport report;
  report.initial_size = family.size();
  Restricted state = start(family);
  while (true) {
    const SetSystem current(family.universe_size(), state.residuals);
    if (auto hit = find_disjoint(current, r, DisjointMode::Exact, options)) {
      report.found = state.certificate(*hit);
      break;
    }
    if (exhausted(state)) break;
    ElementSet used;
    for (const ElementSet s : state.residuals)
      if (!s.intersects(used)) used = used | s;
    const ElementSet t({most_frequent_in(state.residuals, used)});
    state.restrict_to(t);
    report.trace.push_back({t, state.residuals.size()});
  }
  report.final_family = SetSystem(family.universe_size(), state.residuals);
  return report;
}

ExtractionReport regularity_guided_extract(const SetSystem& family, int r, const Rational& kappa,
                                           const SearchOptions& options) {
  require_extractable(family, r);
  if (kappa <= 1) throw InputError("regularity-guided extraction needs kappa > 1");
  ExtractionReport report;
  report.initial_size = family.size();
  Restricted state = start(family);
  while (!state.residuals.empty()) {
    const auto heavy = regular::heavy_set(SetSystem(family.universe_size(), state.residuals), kappa);
    if (!heavy) break;
    state.restrict_to(heavy->t);
    report.trace.push_back({heavy->t, state.residuals.size()});
  }
  report.final_family = SetSystem(family.universe_size(), state.residuals);
  if (auto hit = find_disjoint(report.final_family, r, DisjointMode::Exact, options))
    report.found = state.certificate(*hit);
  return report;
}

std::optional<SunflowerCertificate> find_sunflower_exact(const SetSystem& family, int r,
                                                         const SearchOptions& options) {
  if (r < 2) throw InputError("sunflower search needs r >= 2");
  std::vector<ElementSet> cores;
  for (const ElementSet s : family) core::for_each_subset(s, [&](ElementSet t) { cores.push_back(t); });
  std::sort(cores.begin(), cores.end(),
            [](ElementSet a, ElementSet b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  if (cores.empty() || !cores.front().empty()) cores.insert(cores.begin(), ElementSet());

  for (const ElementSet t : cores) {
    std::vector<ElementSet> residuals;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!t.subset_of(family[i])) continue;
      residuals.push_back(family[i] - t);
      origin.push_back(i);
    }
    if (residuals.size() < static_cast<std::size_t>(r)) continue;
    if (auto hit = DisjointSearch(residuals, r, options.node_budget).run()) {
      SunflowerCertificate cert{t, {}};
      for (const std::size_t i : *hit) cert.petal_indices.push_back(origin[i]);
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<SunflowerCertificate> sunflower_from_approximate(const SetSystem& family, int r, std::uint64_t seed,
                                                               std::uint64_t max_tries) {
  if (family.size() < 2 || !core::is_non_redundant(family))
    throw InputError("approximate-to-exact sunflower step needs a non-redundant family of size >= 2");
  const ElementSet k = core::core_intersection(family);
  std::vector<ElementSet> residuals;
  for (const ElementSet s : family) residuals.push_back(s - k);
  const SetSystem residual(family.universe_size(), residuals);
  const auto hit = coloring_search(residual, r, seed, max_tries);
  if (!hit) return std::nullopt;
  // Residuals are distinct because the family is non-redundant, so indices carry over.
  SunflowerCertificate cert{k, hit->indices};
  std::sort(cert.petal_indices.begin(), cert.petal_indices.end());
  return cert;
}

}  // namespace helianthus::sunflower
