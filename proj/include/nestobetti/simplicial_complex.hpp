#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace nestobetti {

/// Finite abstract simplicial complex on vertex ids 0..vertex_count-1. Faces
/// are sorted id vectors, grouped by dimension and kept in sorted order.
///
/// The void complex has no faces; the empty complex has only ∅.
class SimplicialComplex {
 public:
  using Face = std::vector<std::uint32_t>;

  /// The void complex.
  SimplicialComplex() = default;
  static SimplicialComplex void_complex() { return {}; }
  /// {∅} on `vertex_count` unused vertex ids.
  static SimplicialComplex empty_complex(std::uint32_t vertex_count = 0);

  /// Downward closure of `generators`. Ids must be < vertex_count.
  static SimplicialComplex from_generators(std::uint32_t vertex_count,
                                           const std::vector<Face>& generators);
  /// `faces` must already be closed under subsets and contain ∅.
  static SimplicialComplex from_closed_faces(std::uint32_t vertex_count, std::vector<Face> faces);

  bool is_void() const { return by_dimension_.empty(); }
  std::uint32_t vertex_count() const { return vertex_count_; }
  /// -1 for {∅}, -2 for the void complex.
  int dimension() const { return static_cast<int>(by_dimension_.size()) - 2; }

  /// Faces of dimension `dim` >= -1; empty outside the range.
  const std::vector<Face>& faces(int dim) const;
  std::size_t face_count(int dim) const { return faces(dim).size(); }
  std::size_t total_faces() const;
  /// Vertex ids that span a 0-face.
  std::vector<std::uint32_t> used_vertices() const;
  /// All faces that are maximal under inclusion.
  std::vector<Face> facets() const;

  bool contains(const Face& face) const;
  bool is_downward_closed() const;

  /// Full subcomplex on `keep` (sorted or not). Returned ids are positions in
  /// the sorted keep list. The void complex stays void.
  SimplicialComplex induced(std::vector<std::uint32_t> keep) const;
  /// Re-ids vertices through an injective map into [0, new_count).
  SimplicialComplex relabeled(const std::vector<std::uint32_t>& new_id,
                              std::uint32_t new_count) const;

  /// Σ_{d >= 0} (-1)^d f_d.
  std::int64_t euler_characteristic() const;
  /// Σ_{d >= -1} (-1)^d f_d; 0 for the void complex.
  std::int64_t reduced_euler_characteristic() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::uint32_t vertex_count_ = 0;
  // by_dimension_[d + 1] holds the d-faces.
  std::vector<std::vector<Face>> by_dimension_;
};

/// Chains of the strict order `less` on elements 0..size-1. An empty poset
/// gives {∅}.
SimplicialComplex order_complex(std::uint32_t size,
                                const std::function<bool(std::uint32_t, std::uint32_t)>& less);

/// Flagness test. On failure `witness` is a minimal non-face of size >= 3
/// whose vertices are pairwise adjacent.
struct FlagReport {
  bool flag = true;
  std::optional<SimplicialComplex::Face> witness;

  explicit operator bool() const { return flag; }
};
FlagReport is_flag(const SimplicialComplex& k);

}  // namespace nestobetti
