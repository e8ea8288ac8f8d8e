#include "nestobetti/building_set.hpp"

#include <algorithm>
#include <deque>

namespace nestobetti {

BuildingSet make_trusted_building_set(ElementSet ground, std::vector<ElementSet> members);

BuildingSet::BuildingSet(ElementSet ground, std::vector<ElementSet> sorted_members)
    : ground_(ground), members_(std::move(sorted_members)) {
  index_.reserve(members_.size() * 2);
  for (ElementSet m : members_) index_.insert(m.bits());
}

BuildingSet make_trusted_building_set(ElementSet ground, std::vector<ElementSet> members) {
  std::sort(members.begin(), members.end(), CanonicalLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return BuildingSet(ground, std::move(members));
}

BuildingSet BuildingSet::validate(std::span<const ElementSet> family, ElementSet ground) {
  std::vector<ElementSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  for (ElementSet m : sorted) {
    if (m.empty()) {
      throw ValidationError(ErrorCode::EmptyMember, "building set contains the empty set", {m});
    }
    if (!m.is_subset_of(ground)) {
      throw ValidationError(ErrorCode::MemberOutsideGround,
                            "member " + m.to_string() + " is not contained in ground " +
                                ground.to_string(),
                            {m});
    }
  }

  BuildingSet result(ground, std::move(sorted));
  for (int label : ground) {
    if (!result.contains(ElementSet::singleton(label))) {
      throw ValidationError(ErrorCode::MissingSingleton,
                            "singleton {" + std::to_string(label) + "} is missing", {}, label);
    }
  }

  const auto& members = result.members_;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const ElementSet i = members[a];
      const ElementSet j = members[b];
      if (!i.intersects(j) || i.is_subset_of(j) || j.is_subset_of(i)) continue;
      if (!result.contains(i | j)) {
        throw ValidationError(ErrorCode::UnionAxiomViolated,
                              "members " + i.to_string() + " and " + j.to_string() +
                                  " intersect but their union " + (i | j).to_string() +
                                  " is absent",
                              {i, j});
      }
    }
  }
  return result;
}

BuildingSet BuildingSet::restrict(ElementSet subset) const {
  if (!subset.is_subset_of(ground_)) {
    throw Error(ErrorCode::LabelOutsideGround,
                "restriction set " + subset.to_string() + " is not contained in ground " +
                    ground_.to_string());
  }
  std::vector<ElementSet> kept;
  for (ElementSet m : members_) {
    if (m.is_subset_of(subset)) kept.push_back(m);
  }
  return BuildingSet(subset, std::move(kept));
}

std::vector<ElementSet> BuildingSet::connected_components() const {
  std::vector<ElementSet> components;
  for (auto it = members_.rbegin(); it != members_.rend(); ++it) {
    const bool covered = std::any_of(components.begin(), components.end(),
                                     [&](ElementSet c) { return it->is_subset_of(c); });
    if (!covered) components.push_back(*it);
  }
  std::sort(components.begin(), components.end(),
            [](ElementSet a, ElementSet b) { return a.max() > b.max(); });
  return components;
}

bool BuildingSet::has_odd_component() const {
  for (ElementSet c : connected_components()) {
    if (c.size() % 2 == 1) return true;
  }
  return false;
}

ElementSet BuildingSet::component_of(int label) const {
  ElementSet best;
  for (ElementSet m : members_) {
    if (m.contains(label) && m.size() > best.size()) best = m;
  }
  return best;
}

ChordalityReport BuildingSet::is_chordal() const {
  for (ElementSet m : members_) {
    if (m.size() < 3) continue;
    ElementSet tail = m.without(m.min());
    while (tail.size() >= 2) {
      if (!contains(tail)) return {false, ChordalityWitness{m, tail}};
      tail = tail.without(tail.min());
    }
  }
  return {};
}

bool BuildingSet::is_graphical() const {
  std::vector<std::pair<int, int>> edges;
  for (ElementSet m : members_) {
    if (m.size() == 2) edges.emplace_back(m.min(), m.max());
  }
  return graphical_building_set(SimpleGraph(ground_, edges)) == *this;
}

// ---------------------------------------------------------------------------

SimpleGraph::SimpleGraph(ElementSet vertices, const std::vector<std::pair<int, int>>& edges)
    : vertices_(vertices) {
  for (auto [u, v] : edges) {
    if (u == v) {
      throw Error(ErrorCode::LoopEdge, "loop edge at vertex " + std::to_string(u));
    }
    if (!vertices.contains(u) || !vertices.contains(v)) {
      throw Error(ErrorCode::LabelOutsideGround, "edge " + std::to_string(u) + "-" +
                                                     std::to_string(v) +
                                                     " has an endpoint outside the vertex set");
    }
    adjacency_[u] = adjacency_[u].with(v);
    adjacency_[v] = adjacency_[v].with(u);
  }
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u : vertices_) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (int u : vertices_) twice += adjacency_[u].size();
  return twice / 2;
}

ElementSet SimpleGraph::neighbours(int v) const {
  return vertices_.contains(v) ? adjacency_[v] : ElementSet{};
}

bool SimpleGraph::adjacent(int u, int v) const { return neighbours(u).contains(v); }

SimpleGraph SimpleGraph::induced(ElementSet subset) const {
  SimpleGraph g;
  g.vertices_ = vertices_ & subset;
  for (int v : g.vertices_) g.adjacency_[v] = adjacency_[v] & g.vertices_;
  return g;
}

std::vector<ElementSet> SimpleGraph::components() const {
  std::vector<ElementSet> out;
  ElementSet rest = vertices_;
  while (!rest.empty()) {
    ElementSet comp = ElementSet::singleton(rest.min());
    ElementSet frontier = comp;
    while (!frontier.empty()) {
      ElementSet next;
      for (int v : frontier) next |= adjacency_[v];
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool SimpleGraph::is_connected() const { return components().size() == 1; }

bool SimpleGraph::is_perfect_elimination_ordering() const {
  for (int v : vertices_) {
    ElementSet higher;
    for (int w : adjacency_[v]) {
      if (w > v) higher = higher.with(w);
    }
    for (int a : higher) {
      if (!(higher.without(a)).is_subset_of(adjacency_[a])) return false;
    }
  }
  return true;
}

SimpleGraph complete_graph(int vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= vertex_count; ++u)
    for (int v = u + 1; v <= vertex_count; ++v) edges.emplace_back(u, v);
  return SimpleGraph(ElementSet::interval(1, vertex_count), edges);
}

SimpleGraph path_graph(int vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u < vertex_count; ++u) edges.emplace_back(u, u + 1);
  return SimpleGraph(ElementSet::interval(1, vertex_count), edges);
}

SimpleGraph cycle_graph(int vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u < vertex_count; ++u) edges.emplace_back(u, u + 1);
  if (vertex_count >= 3) edges.emplace_back(vertex_count, 1);
  return SimpleGraph(ElementSet::interval(1, vertex_count), edges);
}

SimpleGraph star_graph(int vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u < vertex_count; ++u) edges.emplace_back(u, vertex_count);
  return SimpleGraph(ElementSet::interval(1, vertex_count), edges);
}

BuildingSet graphical_building_set(const SimpleGraph& graph) {
  // Grow connected vertex sets one neighbour at a time.
  std::unordered_set<std::uint64_t> seen;
  std::deque<ElementSet> queue;
  std::vector<ElementSet> members;
  for (int v : graph.vertices()) {
    const ElementSet s = ElementSet::singleton(v);
    seen.insert(s.bits());
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const ElementSet s = queue.front();
    queue.pop_front();
    members.push_back(s);
    ElementSet boundary;
    for (int v : s) boundary |= graph.neighbours(v);
    boundary -= s;
    for (int v : boundary) {
      const ElementSet grown = s.with(v);
      if (seen.insert(grown.bits()).second) queue.push_back(grown);
    }
  }
  return make_trusted_building_set(graph.vertices(), std::move(members));
}

BuildingSet hochschild_building_set(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) {
    throw Error(ErrorCode::InvalidArgument, "Hochschild building set needs m, n >= 0 and m + n >= 1");
  }
  if (m > 20 || m + n > ElementSet::kMaxLabel) {
    throw Error(ErrorCode::GroundTooLarge, "Hochschild building set too large to enumerate");
  }
  const ElementSet ground = ElementSet::interval(1, m + n);
  std::vector<ElementSet> suffixes{ElementSet{}};
  for (int r = 1; r <= n; ++r) suffixes.push_back(ElementSet::interval(m + r, m + n));

  std::vector<ElementSet> members;
  for (int v : ground) members.push_back(ElementSet::singleton(v));
  for_each_subset(ElementSet::interval(1, m), [&](ElementSet head) {
    for (ElementSet suffix : suffixes) {
      const ElementSet s = head | suffix;
      if (s.size() >= 2) members.push_back(s);
    }
  });
  return make_trusted_building_set(ground, std::move(members));
}

BuildingSet maximal_building_set(ElementSet ground, int bound) {
  if (ground.size() > bound) {
    throw Error(ErrorCode::GroundTooLarge, "maximal building set on " +
                                               std::to_string(ground.size()) +
                                               " elements exceeds the enumeration bound " +
                                               std::to_string(bound));
  }
  std::vector<ElementSet> members;
  members.reserve((std::size_t{1} << ground.size()) - 1);
  for_each_subset(ground, [&](ElementSet s) {
    if (!s.empty()) members.push_back(s);
  });
  return make_trusted_building_set(ground, std::move(members));
}

ElementSet omega_to_subset(ElementSet row_indices, int n) {
  if (n < 1 || n + 1 > ElementSet::kMaxLabel || !row_indices.is_subset_of(ElementSet::interval(1, n))) {
    throw Error(ErrorCode::InvalidArgument, "row indices must lie in [1, n]");
  }
  return row_indices.size() % 2 == 0 ? row_indices : row_indices.with(n + 1);
}

}  // namespace nestobetti
