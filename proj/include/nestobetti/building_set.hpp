#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nestobetti/element_set.hpp"
#include "nestobetti/error.hpp"

namespace nestobetti {

/// Thrown by BuildingSet::validate. Carries the witness of the first
/// violated axiom in canonical member order.
class ValidationError : public Error {
 public:
  ValidationError(ErrorCode code, const std::string& message,
                  std::vector<ElementSet> witness, int label = 0)
      : Error(code, message), witness_(std::move(witness)), label_(label) {}

  /// UnionAxiomViolated: {I, J}; EmptyMember/MemberOutsideGround: {member}.
  const std::vector<ElementSet>& witness() const { return witness_; }
  /// MissingSingleton: the label whose singleton is absent.
  int label() const { return label_; }

 private:
  std::vector<ElementSet> witness_;
  int label_;
};

struct ChordalityWitness {
  ElementSet member;
  ElementSet missing_tail;
};

/// Result of the upper-tail test. `witness` is set iff the set is not chordal.
struct ChordalityReport {
  bool chordal = true;
  std::optional<ChordalityWitness> witness;

  explicit operator bool() const { return chordal; }
};

/// A validated building set: singletons present, closed under unions of
/// intersecting members. Immutable after construction.
class BuildingSet {
 public:
  /// The empty building set on the empty ground set.
  BuildingSet() = default;

  /// Checks the axioms and throws ValidationError naming the first violation.
  static BuildingSet validate(std::span<const ElementSet> family, ElementSet ground);

  ElementSet ground() const { return ground_; }
  /// Members in canonical order (ascending cardinality, then lexicographic).
  const std::vector<ElementSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(ElementSet set) const { return index_.contains(set.bits()); }

  /// B|_I = {J in B : J ⊆ I}.
  BuildingSet restrict(ElementSet subset) const;

  /// Inclusion-maximal members, sorted by descending maximum label.
  std::vector<ElementSet> connected_components() const;
  bool is_connected() const { return !ground_.empty() && contains(ground_); }
  bool has_odd_component() const;
  /// The connected component containing `label`, or the empty set.
  ElementSet component_of(int label) const;

  ChordalityReport is_chordal() const;
  /// True iff B equals the graphical building set of the graph formed by its
  /// 2-element members.
  bool is_graphical() const;

  bool operator==(const BuildingSet& other) const {
    return ground_ == other.ground_ && members_ == other.members_;
  }

 private:
  BuildingSet(ElementSet ground, std::vector<ElementSet> sorted_members);

  ElementSet ground_;
  std::vector<ElementSet> members_;
  std::unordered_set<std::uint64_t> index_;

  // Members already satisfy the axioms (closure-generating constructors).
  friend BuildingSet make_trusted_building_set(ElementSet ground,
                                               std::vector<ElementSet> members);
};

/// Simple undirected graph on a labelled vertex set.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws LoopEdge for u == v and LabelOutsideGround for endpoints outside
  /// `vertices`. Duplicate edges collapse.
  SimpleGraph(ElementSet vertices, const std::vector<std::pair<int, int>>& edges);

  ElementSet vertices() const { return vertices_; }
  /// Sorted pairs (u < v).
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;
  ElementSet neighbours(int v) const;
  bool adjacent(int u, int v) const;

  SimpleGraph induced(ElementSet subset) const;
  bool is_connected() const;
  /// Vertex sets of the connected components.
  std::vector<ElementSet> components() const;
  /// For every vertex, its higher-labelled neighbours form a clique.
  bool is_perfect_elimination_ordering() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  ElementSet vertices_;
  std::vector<ElementSet> adjacency_ = std::vector<ElementSet>(ElementSet::kMaxLabel + 1);
};

SimpleGraph complete_graph(int vertex_count);
SimpleGraph path_graph(int vertex_count);
SimpleGraph cycle_graph(int vertex_count);
/// Star with `vertex_count` vertices whose centre is labelled `vertex_count`.
SimpleGraph star_graph(int vertex_count);

/// Members are the vertex sets of connected induced subgraphs.
BuildingSet graphical_building_set(const SimpleGraph& graph);

/// B_{m,n} on [m+n]: members of size >= 2 meet [m+1, m+n] in the empty set or
/// a suffix [m+r, m+n].
BuildingSet hochschild_building_set(int m, int n);

inline constexpr int kDefaultEnumerationBound = 16;

/// All non-empty subsets of `ground`. Throws GroundTooLarge above `bound`.
BuildingSet maximal_building_set(ElementSet ground, int bound = kDefaultEnumerationBound);

/// The even subset I_omega of [n+1] attached to a sum of rows of the mod 2
/// characteristic matrix.
ElementSet omega_to_subset(ElementSet row_indices, int n);

}  // namespace nestobetti
