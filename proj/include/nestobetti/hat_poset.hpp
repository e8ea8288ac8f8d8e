#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nestobetti/building_set.hpp"
#include "nestobetti/permutations.hpp"
#include "nestobetti/simplicial_complex.hpp"

namespace nestobetti {

/// (a, b) with a the larger entry of the added pair.
struct OmegaLabel {
  int a = 0;
  int b = 0;
  bool operator==(const OmegaLabel&) const = default;
};

struct EdgeLabel {
  int component_max = 0;
  OmegaLabel omega;
  bool operator==(const EdgeLabel&) const = default;
  std::string to_string() const;
};

enum class Comparison { Greater, Less, Equal, Incomparable };

/// α >= β iff x1 >= x2 >= y1 >= y2, or x1 = y1 >= x2 >= y2.
Comparison omega_compare(OmegaLabel alpha, OmegaLabel beta);
/// Larger component maximum wins; ties go to omega_compare.
Comparison label_compare(const EdgeLabel& a, const EdgeLabel& b);

using Chain = std::vector<ElementSet>;

/// Subsets I of the ground whose restriction has no odd-order component,
/// ordered by inclusion, with the μ labels on cover edges.
class HatPoset {
 public:
  struct Cover {
    std::uint32_t target;
    EdgeLabel label;
  };

  explicit HatPoset(const BuildingSet& b);

  const BuildingSet& building_set() const { return b_; }
  /// Elements in canonical order; index 0 is ∅.
  const std::vector<ElementSet>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(ElementSet s) const { return index_.contains(s.bits()); }
  std::uint32_t index_of(ElementSet s) const;
  const std::vector<Cover>& up_covers(std::uint32_t element) const { return up_[element]; }
  std::size_t edge_count() const;
  /// Label of the cover I1 ⋖ I2; throws InvalidArgument if it is not a cover.
  EdgeLabel label(ElementSet lower, ElementSet upper) const;
  bool bounded() const { return contains(b_.ground()); }

  /// Saturated chains from `bottom` to `top` in depth-first cover order.
  /// Throws EmptyInterval unless both are elements and bottom ⊆ top.
  void for_each_maximal_chain(ElementSet bottom, ElementSet top,
                              const std::function<void(const Chain&)>& visit) const;
  std::vector<Chain> maximal_chains(ElementSet bottom, ElementSet top) const;

  std::vector<EdgeLabel> labels_of(const Chain& chain) const;
  /// 1-based label positions i with λ_i ≻ λ_{i+1} strictly.
  std::vector<int> decreasing_positions(const Chain& chain) const;
  /// λ_1 ⪰ λ_2 ⪰ ... (equality allowed).
  bool is_decreasing(const Chain& chain) const;

  /// Δ of the proper part (∅ and the ground removed).
  SimplicialComplex proper_part_order_complex() const;

 private:
  BuildingSet b_;
  std::vector<ElementSet> elements_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::vector<Cover>> up_;
};

inline constexpr int kDefaultElGroundBound = 8;

struct IntervalCertificate {
  ElementSet bottom;
  ElementSet top;
  Chain decreasing_chain;
};

struct ElReport {
  bool ok = true;
  /// One entry per interval in (bottom, top) canonical order when ok.
  std::vector<IntervalCertificate> certificates;
  /// The decreasing chain of the whole poset when ok.
  Chain top_chain;
  std::optional<IntervalCertificate> failing_interval;
  std::string failure;

  explicit operator bool() const { return ok; }
};

/// Checks every interval: exactly one decreasing maximal chain, whose label
/// sequence is strictly greater than every other chain's at the first
/// difference. Throws Unbounded and GroundTooLarge.
ElReport verify_el(const BuildingSet& b, int max_ground = kDefaultElGroundBound);

/// alt_N = number of maximal chains of the whole poset with N decreasing
/// positions, N = 0 .. k-1. Throws Unbounded.
std::vector<std::uint64_t> alt_histogram(const HatPoset& p);

/// (x_{2i-1}, x_{2i}) = (max, min) of I_i minus I_{i-1}. Throws
/// ChainHasDecreasingPosition unless the chain is a full maximal chain of p
/// with no decreasing position.
Permutation chain_to_permutation(const HatPoset& p, const Chain& chain);
/// I_i = {x_1, ..., x_2i}. Throws NotAlternatingBPermutation.
Chain permutation_to_chain(const Permutation& x, const BuildingSet& b);

struct EulerIdentity {
  std::int64_t chi = 0;  // unreduced χ(Δ(P_B)) from face counts
  std::int64_t alt_top = 0;
  std::int64_t alt_zero = 0;
  std::int64_t rhs = 0;  // alt_{k-1} + (-1)^{k-2} alt_0
  bool holds() const { return chi == rhs; }
};

/// Requires chordal B with no odd component and |ground| = 2k, k >= 2.
EulerIdentity euler_identity_check(const BuildingSet& b);

std::string chain_to_string(const Chain& chain);

}  // namespace nestobetti
