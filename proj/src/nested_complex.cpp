#include "nestobetti/nested_complex.hpp"

#include <algorithm>

namespace nestobetti {

std::vector<ElementSet> NestedSetComplex::members_of(const SimplicialComplex::Face& face) const {
  std::vector<ElementSet> out;
  out.reserve(face.size());
  for (std::uint32_t v : face) out.push_back(vertices.at(v));
  return out;
}

namespace {

bool compatible(ElementSet a, ElementSet b, const BuildingSet& bs) {
  if (a.is_subset_of(b) || b.is_subset_of(a)) return true;
  return !a.intersects(b) && !bs.contains(a | b);
}

// Condition (2) for a face that gains `added`: every pairwise disjoint
// subcollection containing `added` must union outside B. Subcollections
// without `added` were checked when the face was built.
bool disjoint_unions_ok(const std::vector<ElementSet>& face, ElementSet added,
                        const BuildingSet& bs) {
  std::vector<ElementSet> disjoint;
  for (ElementSet f : face) {
    if (!f.intersects(added)) disjoint.push_back(f);
  }
  if (disjoint.size() < 2) return true;  // the pair case is the pairwise test
  // Walk antichains of pairwise disjoint sets by depth-first extension.
  bool ok = true;
  auto walk = [&](auto&& self, std::size_t from, ElementSet acc, int picked) -> void {
    if (!ok) return;
    if (picked >= 2 && bs.contains(acc)) {
      ok = false;
      return;
    }
    for (std::size_t i = from; i < disjoint.size(); ++i) {
      if (!disjoint[i].intersects(acc)) self(self, i + 1, acc | disjoint[i], picked + 1);
    }
  };
  walk(walk, 0, added, 1);
  return ok;
}

}  // namespace

bool is_nested_set(std::span<const ElementSet> collection, const BuildingSet& b) {
  for (ElementSet s : collection) {
    if (!b.contains(s) || s == b.ground()) {
      throw Error(ErrorCode::VertexNotInBuildingSet,
                  s.to_string() + " is not a vertex of the nested set complex");
    }
  }
  for (std::size_t i = 0; i < collection.size(); ++i)
    for (std::size_t j = i + 1; j < collection.size(); ++j)
      if (!compatible(collection[i], collection[j], b)) return false;
  std::vector<ElementSet> face;
  for (ElementSet s : collection) {
    if (!disjoint_unions_ok(face, s, b)) return false;
    face.push_back(s);
  }
  return true;
}

NestedSetComplex filtered_nested_complex(const BuildingSet& b,
                                         const std::function<bool(ElementSet)>& keep,
                                         std::size_t max_faces) {
  NestedSetComplex out;
  for (ElementSet m : b.members()) {
    if (m != b.ground() && keep(m)) out.vertices.push_back(m);
  }
  const auto n = static_cast<std::uint32_t>(out.vertices.size());

  std::vector<std::vector<std::uint32_t>> later(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (compatible(out.vertices[i], out.vertices[j], b)) later[i].push_back(j);

  std::vector<SimplicialComplex::Face> faces{{}};
  SimplicialComplex::Face face;
  std::vector<ElementSet> sets;
  // candidates: vertices compatible with every vertex of the current face.
  auto grow = [&](auto&& self, const std::vector<std::uint32_t>& candidates) -> void {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const std::uint32_t v = candidates[c];
      if (!disjoint_unions_ok(sets, out.vertices[v], b)) continue;
      face.push_back(v);
      sets.push_back(out.vertices[v]);
      faces.push_back(face);
      if (faces.size() > max_faces) {
        throw Error(ErrorCode::TooLarge, "nested set complex exceeds " +
                                             std::to_string(max_faces) + " faces");
      }
      std::vector<std::uint32_t> next;
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(c) + 1,
                            candidates.end(), later[v].begin(), later[v].end(),
                            std::back_inserter(next));
      self(self, next);
      face.pop_back();
      sets.pop_back();
    }
  };
  std::vector<std::uint32_t> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
  grow(grow, all);

  out.complex = SimplicialComplex::from_closed_faces(n, std::move(faces));
  return out;
}

NestedSetComplex nested_set_complex(const BuildingSet& b, std::size_t max_faces) {
  return filtered_nested_complex(b, [](ElementSet) { return true; }, max_faces);
}

NestedSetComplex induced_parity_subcomplex(const BuildingSet& b, ElementSet subset,
                                           std::size_t max_faces) {
  if (!subset.is_subset_of(b.ground())) {
    throw Error(ErrorCode::LabelOutsideGround,
                subset.to_string() + " is not contained in " + b.ground().to_string());
  }
  if (subset.empty()) return {};
  return filtered_nested_complex(
      b, [subset](ElementSet j) { return (j & subset).size() % 2 == 1; }, max_faces);
}

NestedSetComplex odd_complex(const BuildingSet& b, std::size_t max_faces) {
  return filtered_nested_complex(b, [](ElementSet j) { return j.size() % 2 == 1; }, max_faces);
}

NestedSetComplex even_complex(const BuildingSet& b, std::size_t max_faces) {
  return filtered_nested_complex(b, [](ElementSet j) { return j.size() % 2 == 0; }, max_faces);
}

}  // namespace nestobetti
