#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nestobetti/building_set.hpp"
#include "nestobetti/execution.hpp"
#include "nestobetti/homology.hpp"

namespace nestobetti {

enum class Method { Alternating, Homology, Both, ClosedForm, ANumber };
std::string to_string(Method m);

struct SubsetContribution {
  ElementSet subset;
  int k = 0;
  std::uint64_t count = 0;
  bool operator==(const SubsetContribution&) const = default;
};

/// β_0, β_1, ... of the real toric manifold, trailing zeros trimmed, plus the
/// non-zero per-subset contributions in canonical subset order.
struct BettiReport {
  Method method = Method::Alternating;
  std::vector<std::uint64_t> betti;
  std::vector<SubsetContribution> breakdown;
  double seconds = 0.0;

  std::uint64_t at(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < betti.size() ? betti[k] : 0;
  }
  /// Sum of breakdown counts per k.
  std::vector<std::uint64_t> breakdown_totals() const;
};

/// Σ over 2k-subsets I of the alternating B|_I-permutation count. Throws
/// NotConnected and NotChordal.
BettiReport real_betti_alternating(const BuildingSet& b, Execution exec = Execution::Parallel);

/// Σ over even I of β̃_{k-1}((K_B)_I), every degree of every I included.
/// Throws NotConnected; TooLarge from the complex enumeration.
BettiReport real_betti_homology_oracle(const BuildingSet& b, Execution exec = Execution::Parallel,
                                       RankMethod rank = RankMethod::Exact);

/// β̃ of (K_B)_I.
BettiVector parity_subcomplex_homology(const BuildingSet& b, ElementSet subset,
                                       RankMethod rank = RankMethod::Exact);

/// Position d holds β_{2d} of the complex toric manifold; odd degrees vanish.
/// Throws NotConnected and NotChordal.
std::vector<std::uint64_t> complex_betti(const BuildingSet& b);

inline constexpr int kDefaultANumberBound = 12;

/// Signed a-number: sa(∅) = 1, connected odd order 0, connected even order
/// minus the sum over proper induced subgraphs, multiplicative over
/// components. Throws TooLarge above `bound` vertices.
std::int64_t signed_a_number(const SimpleGraph& g, int bound = kDefaultANumberBound);
std::uint64_t a_number(const SimpleGraph& g, int bound = kDefaultANumberBound);

/// β_k = Σ over 2k-subsets I of a(G|_I).
BettiReport real_betti_graph(const SimpleGraph& g, int bound = kDefaultANumberBound);

struct HochschildTerm {
  int s = 0;
  int r = 0;
  std::uint64_t binomial = 0;  // C(m, s)
  std::uint64_t alt = 0;       // |Alt_Hoch(s, r)|
};

/// Closed form Σ_{s+r=2k, s<=m, r<=n} C(m,s)|Alt_Hoch(s,r)|.
BettiReport hochschild_betti(int m, int n);
/// Non-zero terms of the closed form for β_k.
std::vector<HochschildTerm> hochschild_terms(int m, int n, int k);
/// hochschild_betti(m, n) agrees for n = m+2, m+3, m+4.
bool hochschild_stability_check(int m);

struct SubsetComparison {
  ElementSet subset;
  int k = 0;
  std::uint64_t alternating = 0;
  /// β̃_{k-1}((K_B)_I).
  std::uint64_t homology = 0;
  /// β̃ of (K_B)_I outside degree k-1, summed.
  std::uint64_t off_degree = 0;
  bool agree() const { return alternating == homology && off_degree == 0; }
};

struct MethodComparison {
  bool chordal = false;
  std::vector<std::uint64_t> alternating_totals;
  std::vector<std::uint64_t> homology_totals;
  /// Every non-empty even subset with a non-zero entry on either side.
  std::vector<SubsetComparison> rows;

  bool totals_agree() const { return alternating_totals == homology_totals; }
  bool all_agree() const;
  std::vector<SubsetComparison> mismatches() const;
};

/// Runs both pipelines without asserting chordality. Throws NotConnected.
MethodComparison compare_methods(const BuildingSet& b, Execution exec = Execution::Parallel);

bool is_unimodal(const std::vector<std::uint64_t>& seq);
bool is_log_concave(const std::vector<std::uint64_t>& seq);

}  // namespace nestobetti
