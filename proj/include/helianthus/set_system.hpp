#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace helianthus::core {

/// Hard cap on universe size; every element index fits in one 64-bit word.
inline constexpr int kMaxUniverse = 64;

/// A finite set of element indices in [0, 64), stored as a bitmask.
///
/// Ordering (`operator<`) is lexicographic on the ascending index lists, so
/// {0} < {0,1} < {0,2} < {1}. Every "lexicographic" tie-break in the
/// library uses this order.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t mask) : mask_(mask) {}
  ElementSet(std::initializer_list<int> indices);

  /// Throws InputError for indices outside [0, 64).
  static ElementSet from_indices(std::span<const int> indices);

  [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
  [[nodiscard]] constexpr int size() const { return std::popcount(mask_); }
  [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
  [[nodiscard]] constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
  [[nodiscard]] constexpr bool subset_of(ElementSet other) const { return (mask_ & ~other.mask_) == 0; }
  [[nodiscard]] constexpr bool intersects(ElementSet other) const { return (mask_ & other.mask_) != 0; }
  /// Largest index + 1, or 0 for the empty set.
  [[nodiscard]] constexpr int span_end() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

  [[nodiscard]] std::vector<int> indices() const;
  [[nodiscard]] std::string to_string() const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(mask_ | o.mask_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(mask_ & o.mask_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(mask_ & ~o.mask_); }
  constexpr bool operator==(const ElementSet&) const = default;

  friend bool operator<(ElementSet a, ElementSet b);

 private:
  std::uint64_t mask_ = 0;
};

bool operator<(ElementSet a, ElementSet b);

/// Calls fn(ElementSet) for every subset of `s` (including the empty set
/// and `s` itself), in increasing mask order.
template <typename Fn>
void for_each_subset(ElementSet s, Fn&& fn) {
  const std::uint64_t full = s.mask();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// An input x in {0,1}^X, represented by the set of coordinates equal to 1.
struct Assignment {
  ElementSet ones;
};

/// A family of distinct subsets of [0, universe_size). Doubles as the
/// monotone DNF whose terms are the member sets.
///
/// Duplicates are merged on construction (first occurrence wins), so the
/// member order is the insertion order with repeats dropped. Values are
/// immutable once built.
class SetSystem {
 public:
  SetSystem() = default;
  /// Throws InputError if universe_size is outside [0, 64] or a member uses
  /// an index >= universe_size.
  SetSystem(int universe_size, std::vector<ElementSet> sets);
  SetSystem(int universe_size, std::initializer_list<std::initializer_list<int>> sets);

  [[nodiscard]] int universe_size() const { return universe_; }
  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] std::size_t size() const { return sets_.size(); }
  [[nodiscard]] bool empty() const { return sets_.empty(); }
  [[nodiscard]] const std::vector<ElementSet>& sets() const { return sets_; }
  [[nodiscard]] const ElementSet& operator[](std::size_t i) const { return sets_[i]; }
  [[nodiscard]] auto begin() const { return sets_.begin(); }
  [[nodiscard]] auto end() const { return sets_.end(); }

  [[nodiscard]] bool contains(ElementSet s) const;
  [[nodiscard]] std::optional<std::size_t> index_of(ElementSet s) const;
  /// Union of all members.
  [[nodiscard]] ElementSet support() const;

  /// Order-sensitive equality (same universe, same members in same order).
  bool operator==(const SetSystem& other) const = default;

 private:
  int universe_ = 0;
  int width_ = 0;
  std::vector<ElementSet> sets_;
};

/// Order-insensitive comparison of the member families.
[[nodiscard]] bool same_family(const SetSystem& a, const SetSystem& b);

/// f_F(x): 1 iff some member is contained in x.
[[nodiscard]] bool evaluate(const SetSystem& family, Assignment x);

/// True iff the family is an antichain.
[[nodiscard]] bool is_non_redundant(const SetSystem& family);

/// True iff the family is non-empty and does not contain the empty set.
[[nodiscard]] bool is_non_trivial(const SetSystem& family);

/// Members not strictly contained in another member. Always an antichain.
[[nodiscard]] SetSystem maximal_subsystem(const SetSystem& family);

/// Members not strictly containing another member: the unique antichain
/// computing the same monotone function.
[[nodiscard]] SetSystem minimal_subsystem(const SetSystem& family);

/// {S \ T : S in F, T subset of S}. Distinct S give distinct S \ T, so no
/// multiplicities arise.
[[nodiscard]] SetSystem link(const SetSystem& family, ElementSet t);

/// Intersection of all members; throws InputError on an empty family.
[[nodiscard]] ElementSet core_intersection(const SetSystem& family);

/// True iff every member of `lower` is a member of `family`.
[[nodiscard]] bool is_proper_lower(const SetSystem& lower, const SetSystem& family);

struct ProperUpperResult {
  bool proper = false;
  /// When not proper: x = 1_S for a member S of `family` that no member of
  /// `upper` fits inside; then f_family(x) = 1 and f_upper(x) = 0.
  std::optional<Assignment> witness;
};

/// Throws InputError if the universes differ.
[[nodiscard]] ProperUpperResult check_proper_upper(const SetSystem& upper, const SetSystem& family);

}  // namespace helianthus::core
