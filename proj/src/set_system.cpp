#include "helianthus/set_system.hpp"

#include "helianthus/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace helianthus::core {

ElementSet::ElementSet(std::initializer_list<int> indices)
    : ElementSet(from_indices(std::span<const int>(indices.begin(), indices.size()))) {}

ElementSet ElementSet::from_indices(std::span<const int> indices) {
  std::uint64_t mask = 0;
  for (const int i : indices) {
    if (i < 0 || i >= kMaxUniverse) throw InputError("element index " + std::to_string(i) + " outside [0, 64)");
    mask |= std::uint64_t{1} << i;
  }
  return ElementSet(mask);
}

std::vector<int> ElementSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const int i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool operator<(ElementSet a, ElementSet b) {
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const std::uint64_t above = d == 63 ? 0 : (~std::uint64_t{0} << (d + 1));
  // Sorted lists agree below d. The list holding d is smaller exactly when
  // the other list still has an element past d.
  if (a.contains(d)) return (b.mask() & above) != 0;
  return (a.mask() & above) == 0;
}

SetSystem::SetSystem(int universe_size, std::vector<ElementSet> sets) : universe_(universe_size) {
  if (universe_size < 0 || universe_size > kMaxUniverse)
    throw InputError("universe size " + std::to_string(universe_size) + " outside [0, 64]");
  std::unordered_set<std::uint64_t> seen;
  sets_.reserve(sets.size());
  for (const ElementSet s : sets) {
    if (s.span_end() > universe_size)
      throw InputError("set " + s.to_string() + " exceeds universe of size " + std::to_string(universe_size));
    if (!seen.insert(s.mask()).second) continue;
    sets_.push_back(s);
    width_ = std::max(width_, s.size());
  }
}

SetSystem::SetSystem(int universe_size, std::initializer_list<std::initializer_list<int>> sets)
    : SetSystem(universe_size, [&] {
        std::vector<ElementSet> v;
        for (const auto& s : sets) v.push_back(ElementSet(s));
        return v;
      }()) {}

bool SetSystem::contains(ElementSet s) const { return index_of(s).has_value(); }

std::optional<std::size_t> SetSystem::index_of(ElementSet s) const {
  const auto it = std::find(sets_.begin(), sets_.end(), s);
  if (it == sets_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

ElementSet SetSystem::support() const {
  ElementSet u;
  for (const ElementSet s : sets_) u = u | s;
  return u;
}

bool same_family(const SetSystem& a, const SetSystem& b) {
  if (a.universe_size() != b.universe_size() || a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](ElementSet s) { return b.contains(s); });
}

bool evaluate(const SetSystem& family, Assignment x) {
  if (x.ones.span_end() > family.universe_size())
    throw InputError("assignment " + x.ones.to_string() + " outside the universe");
  return std::any_of(family.begin(), family.end(), [&](ElementSet s) { return s.subset_of(x.ones); });
}

bool is_non_redundant(const SetSystem& family) {
  const auto& s = family.sets();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j && s[i].subset_of(s[j])) return false;
  return true;
}

bool is_non_trivial(const SetSystem& family) {
  return !family.empty() && !family.contains(ElementSet());
}

SetSystem maximal_subsystem(const SetSystem& family) {
  std::vector<ElementSet> kept;
  for (const ElementSet s : family) {
    const bool dominated =
        std::any_of(family.begin(), family.end(), [&](ElementSet o) { return o != s && s.subset_of(o); });
    if (!dominated) kept.push_back(s);
  }
  return SetSystem(family.universe_size(), std::move(kept));
}

SetSystem minimal_subsystem(const SetSystem& family) {
  std::vector<ElementSet> kept;
  for (const ElementSet s : family) {
    const bool dominates =
        std::any_of(family.begin(), family.end(), [&](ElementSet o) { return o != s && o.subset_of(s); });
    if (!dominates) kept.push_back(s);
  }
  return SetSystem(family.universe_size(), std::move(kept));
}

SetSystem link(const SetSystem& family, ElementSet t) {
  std::vector<ElementSet> out;
  for (const ElementSet s : family)
    if (t.subset_of(s)) out.push_back(s - t);
  return SetSystem(family.universe_size(), std::move(out));
}

ElementSet core_intersection(const SetSystem& family) {
  if (family.empty()) throw InputError("core_intersection of an empty family");
  ElementSet k = family[0];
  for (const ElementSet s : family) k = k & s;
  return k;
}

bool is_proper_lower(const SetSystem& lower, const SetSystem& family) {
  return std::all_of(lower.begin(), lower.end(), [&](ElementSet s) { return family.contains(s); });
}

ProperUpperResult check_proper_upper(const SetSystem& upper, const SetSystem& family) {
  if (upper.universe_size() != family.universe_size())
    throw InputError("check_proper_upper: universes differ");
  for (const ElementSet s : family) {
    const bool covered = std::any_of(upper.begin(), upper.end(), [&](ElementSet u) { return u.subset_of(s); });
    if (!covered) return {false, Assignment{s}};
  }
  return {true, std::nullopt};
}

}  // namespace helianthus::core
