#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nestobetti/building_set.hpp"
#include "nestobetti/execution.hpp"

namespace nestobetti {

/// One-line notation (x_1 x_2 ... x_k) of a bijective arrangement of a set of
/// labels.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument on repeated labels, LabelOutOfRange on bad labels.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  ElementSet underlying_set() const { return set_; }

  /// Number of positions i with x_i > x_{i+1}.
  int descents() const;
  /// "(625143)" when every label is a single digit, "(10 2 9 1)" otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation& other) const { return entries_ <=> other.entries_; }
  bool operator==(const Permutation& other) const { return entries_ == other.entries_; }

 private:
  std::vector<int> entries_;
  ElementSet set_;
};

/// x_1 > x_2 < x_3 > ...; the empty and one-entry permutations qualify.
bool is_alternating(const Permutation& x);

/// No i < j < l with x_j < x_l < x_i.
bool is_312_avoiding(const Permutation& x);

/// Every prefix keeps x_i and the prefix maximum in one connected component
/// of B restricted to the prefix. Throws LabelOutsideGround.
bool is_b_permutation(const Permutation& x, const BuildingSet& b);

/// Same predicate through the member formulation: some member of B|_prefix
/// contains both x_i and the prefix maximum. Used as a cross-check.
bool is_b_permutation_by_members(const Permutation& x, const BuildingSet& b);

/// Lookup T -> (component of max T in B|_T) over all subsets T of the ground
/// set, addressed in rank space (the i-th smallest label has rank i).
/// Restrictions reuse the table: (B|_I)|_T = B|_T for T ⊆ I.
class ComponentTable {
 public:
  static constexpr int kMaxTabulatedRanks = 22;

  explicit ComponentTable(const BuildingSet& b, Execution exec = Execution::Parallel);

  int rank_count() const { return static_cast<int>(labels_.size()); }
  int label(int rank) const { return labels_[rank]; }
  std::uint64_t to_mask(ElementSet set) const;
  ElementSet to_set(std::uint64_t mask) const;

  /// Mask of the component containing the largest rank of `mask` in B|_mask.
  std::uint64_t max_component(std::uint64_t mask) const;

  /// The connected components of B|_mask, peeled from the largest label down.
  std::vector<std::uint64_t> components(std::uint64_t mask) const;
  bool has_odd_component(std::uint64_t mask) const;

 private:
  std::uint64_t compute(std::uint64_t mask) const;

  std::vector<int> labels_;
  // Members in rank space, grouped by their largest rank.
  std::vector<std::vector<std::uint64_t>> members_by_top_;
  std::vector<std::uint32_t> table_;
  bool tabulated_ = false;
};

/// Counts alternating B|_I-permutations for I given as a rank mask of the
/// table's ground. Optional witnesses are appended in lexicographic order.
std::uint64_t count_alternating_in(const ComponentTable& table, std::uint64_t subset,
                                   std::vector<Permutation>* witnesses = nullptr);

/// Backtracking count of alternating B-permutations of the whole ground set.
/// Odd ground sets return 0 without search; the empty ground set counts the
/// empty permutation.
std::uint64_t count_alternating_b_permutations(const BuildingSet& b,
                                               std::vector<Permutation>* witnesses = nullptr);

/// Position d holds the number of B-permutations of the ground with exactly d
/// descents. Requires B connected and chordal.
using DescentHistogram = std::vector<std::uint64_t>;
DescentHistogram descent_histogram_of_b_permutations(const BuildingSet& b);

/// |Alt_Hoch(s, r)|: alternating permutations of [s+r] whose r largest values
/// appear in decreasing order.
std::uint64_t count_alt_hoch(int s, int r);
/// Same quantity through the generic counter on B_{s,r}.
std::uint64_t count_alt_hoch_generic(int s, int r);

/// Number of 312-avoiding alternating permutations of [length].
std::uint64_t count_312_avoiding_alternating(int length,
                                             std::vector<Permutation>* witnesses = nullptr);

}  // namespace nestobetti
