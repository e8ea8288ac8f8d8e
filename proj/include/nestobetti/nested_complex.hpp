#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nestobetti/building_set.hpp"
#include "nestobetti/simplicial_complex.hpp"

namespace nestobetti {

/// Nested sets of B, excluding the ground set from the vertex set. For a
/// disconnected B the proper components stay vertices (the cone apexes that
/// make odd-component restrictions contractible).
struct NestedSetComplex {
  /// vertices[i] is the member behind vertex id i, canonical order.
  std::vector<ElementSet> vertices;
  SimplicialComplex complex;

  /// Member sets of a face.
  std::vector<ElementSet> members_of(const SimplicialComplex::Face& face) const;
};

inline constexpr std::size_t kDefaultFaceBound = 4'000'000;

/// Conditions (1) pairwise nested-or-disjoint and (2) no union of >= 2
/// pairwise disjoint elements is a member. Throws VertexNotInBuildingSet for
/// non-members and for the ground set.
bool is_nested_set(std::span<const ElementSet> collection, const BuildingSet& b);

/// Throws TooLarge when more than `max_faces` faces would be produced.
NestedSetComplex nested_set_complex(const BuildingSet& b, std::size_t max_faces = kDefaultFaceBound);

/// Full subcomplex of K_B on vertices J with |J ∩ I| odd. I = ∅ gives the
/// void complex.
NestedSetComplex induced_parity_subcomplex(const BuildingSet& b, ElementSet subset,
                                           std::size_t max_faces = kDefaultFaceBound);

/// Full subcomplexes on odd / even cardinality vertices.
NestedSetComplex odd_complex(const BuildingSet& b, std::size_t max_faces = kDefaultFaceBound);
NestedSetComplex even_complex(const BuildingSet& b, std::size_t max_faces = kDefaultFaceBound);

/// Full subcomplex of K_B on the vertices accepted by `keep`.
NestedSetComplex filtered_nested_complex(const BuildingSet& b,
                                         const std::function<bool(ElementSet)>& keep,
                                         std::size_t max_faces = kDefaultFaceBound);

}  // namespace nestobetti
