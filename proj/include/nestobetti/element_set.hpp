#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace nestobetti {

/// A finite set of positive integer labels in [1, 64], stored as a bit mask
/// (label i occupies bit i-1). Iteration is in ascending label order.
class ElementSet {
 public:
  static constexpr int kMaxLabel = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> labels);
  explicit ElementSet(const std::vector<int>& labels);

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static ElementSet interval(int lo, int hi);
  static ElementSet singleton(int label);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  bool contains(int label) const;

  /// Smallest / largest label. Undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  constexpr int max() const { return 64 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  ElementSet with(int label) const;
  ElementSet without(int label) const;

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> labels() const;
  /// "{1,2,5}", "{}" for the empty set.
  std::string to_string() const;

  constexpr ElementSet operator|(ElementSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Deterministic family order: ascending cardinality, then lexicographic on
/// the ascending label lists.
bool canonical_less(ElementSet a, ElementSet b);

struct CanonicalLess {
  bool operator()(ElementSet a, ElementSet b) const { return canonical_less(a, b); }
};

/// Calls `visit(subset)` for every subset of `set` (including the empty set
/// and `set` itself), in increasing order of the underlying bit pattern.
template <typename Visitor>
void for_each_subset(ElementSet set, Visitor&& visit) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    visit(ElementSet::from_bits(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace nestobetti

template <>
struct std::hash<nestobetti::ElementSet> {
  std::size_t operator()(nestobetti::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
