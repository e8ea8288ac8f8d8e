#include "nestobetti/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "nestobetti/error.hpp"

namespace nestobetti {

namespace {

const std::vector<SimplicialComplex::Face> kNoFaces;

void check_ids(const SimplicialComplex::Face& f, std::uint32_t vertex_count) {
  for (std::uint32_t v : f) {
    if (v >= vertex_count) {
      throw Error(ErrorCode::InvalidArgument, "vertex id " + std::to_string(v) + " out of range");
    }
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::empty_complex(std::uint32_t vertex_count) {
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  k.by_dimension_.push_back({Face{}});
  return k;
}

SimplicialComplex SimplicialComplex::from_generators(std::uint32_t vertex_count,
                                                     const std::vector<Face>& generators) {
  std::set<Face> closed;
  for (Face g : generators) {
    check_ids(g, vertex_count);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (g.size() > 30) throw Error(ErrorCode::TooLarge, "generator too large to close");
    const std::uint32_t subsets = 1u << g.size();
    for (std::uint32_t m = 0; m < subsets; ++m) {
      Face f;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (m >> i & 1u) f.push_back(g[i]);
      }
      closed.insert(std::move(f));
    }
  }
  return from_closed_faces(vertex_count, std::vector<Face>(closed.begin(), closed.end()));
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::uint32_t vertex_count,
                                                       std::vector<Face> faces) {
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  for (Face& f : faces) {
    const std::size_t slot = f.size();
    if (k.by_dimension_.size() <= slot) k.by_dimension_.resize(slot + 1);
    k.by_dimension_[slot].push_back(std::move(f));
  }
  for (auto& layer : k.by_dimension_) std::sort(layer.begin(), layer.end());
  return k;
}

const std::vector<SimplicialComplex::Face>& SimplicialComplex::faces(int dim) const {
  const int slot = dim + 1;
  if (slot < 0 || slot >= static_cast<int>(by_dimension_.size())) return kNoFaces;
  return by_dimension_[slot];
}

std::size_t SimplicialComplex::total_faces() const {
  std::size_t n = 0;
  for (const auto& layer : by_dimension_) n += layer.size();
  return n;
}

std::vector<std::uint32_t> SimplicialComplex::used_vertices() const {
  std::vector<std::uint32_t> out;
  for (const Face& f : faces(0)) out.push_back(f[0]);
  return out;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (int d = dimension(); d >= -1; --d) {
    for (const Face& f : faces(d)) {
      // Maximal iff no face one dimension up contains it.
      bool covered = false;
      for (const Face& g : faces(d + 1)) {
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          covered = true;
          break;
        }
      }
      if (!covered) out.push_back(f);
    }
  }
  return out;
}

bool SimplicialComplex::contains(const Face& face) const {
  Face f = face;
  std::sort(f.begin(), f.end());
  const auto& layer = faces(static_cast<int>(f.size()) - 1);
  return std::binary_search(layer.begin(), layer.end(), f);
}

bool SimplicialComplex::is_downward_closed() const {
  if (is_void()) return true;
  if (face_count(-1) != 1) return false;
  for (int d = 1; d <= dimension(); ++d) {
    for (const Face& f : faces(d)) {
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        Face g;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (i != skip) g.push_back(f[i]);
        }
        if (!contains(g)) return false;
      }
    }
  }
  for (const Face& f : faces(0)) {
    if (f[0] >= vertex_count_) return false;
  }
  return true;
}

SimplicialComplex SimplicialComplex::induced(std::vector<std::uint32_t> keep) const {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (is_void()) return {};
  std::vector<std::uint32_t> new_id(vertex_count_, UINT32_MAX);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id.at(keep[i]) = static_cast<std::uint32_t>(i);

  SimplicialComplex k;
  k.vertex_count_ = static_cast<std::uint32_t>(keep.size());
  for (const auto& layer : by_dimension_) {
    std::vector<Face> kept;
    for (const Face& f : layer) {
      Face g;
      g.reserve(f.size());
      for (std::uint32_t v : f) {
        if (new_id[v] == UINT32_MAX) break;
        g.push_back(new_id[v]);
      }
      if (g.size() == f.size()) kept.push_back(std::move(g));
    }
    if (kept.empty()) break;
    k.by_dimension_.push_back(std::move(kept));
  }
  return k;
}

SimplicialComplex SimplicialComplex::relabeled(const std::vector<std::uint32_t>& new_id,
                                               std::uint32_t new_count) const {
  std::vector<Face> all;
  for (const auto& layer : by_dimension_) {
    for (const Face& f : layer) {
      Face g;
      for (std::uint32_t v : f) g.push_back(new_id.at(v));
      check_ids(g, new_count);
      std::sort(g.begin(), g.end());
      all.push_back(std::move(g));
    }
  }
  return from_closed_faces(new_count, std::move(all));
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int d = 0; d <= dimension(); ++d) {
    const auto f = static_cast<std::int64_t>(face_count(d));
    chi += (d % 2 == 0) ? f : -f;
  }
  return chi;
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const {
  return euler_characteristic() - static_cast<std::int64_t>(face_count(-1));
}

SimplicialComplex order_complex(std::uint32_t size,
                                const std::function<bool(std::uint32_t, std::uint32_t)>& less) {
  // Sort elements by a linear extension so chains come out increasing.
  std::vector<std::vector<std::uint32_t>> above(size);
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t b = 0; b < size; ++b)
      if (a != b && less(a, b)) above[a].push_back(b);

  std::vector<SimplicialComplex::Face> faces{{}};
  std::vector<std::uint32_t> chain;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t top) {
    for (std::uint32_t b : above[top]) {
      chain.push_back(b);
      auto f = chain;
      std::sort(f.begin(), f.end());
      faces.push_back(std::move(f));
      extend(b);
      chain.pop_back();
    }
  };
  for (std::uint32_t a = 0; a < size; ++a) {
    chain = {a};
    faces.push_back(chain);
    extend(a);
  }
  return SimplicialComplex::from_closed_faces(size, std::move(faces));
}

FlagReport is_flag(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  std::vector<std::vector<bool>> adjacent(k.vertex_count(), std::vector<bool>(k.vertex_count()));
  for (const auto& e : k.faces(1)) adjacent[e[0]][e[1]] = adjacent[e[1]][e[0]] = true;

  // A minimal non-face of size s has every (s-1)-subset as a face; grow from
  // faces of size s-1 by a larger vertex adjacent to all of them.
  for (int d = 1;; ++d) {
    const auto& layer = k.faces(d);
    if (layer.empty()) break;
    for (const auto& f : layer) {
      for (std::uint32_t v = f.back() + 1; v < k.vertex_count(); ++v) {
        if (!std::all_of(f.begin(), f.end(), [&](std::uint32_t u) { return adjacent[u][v]; }))
          continue;
        SimplicialComplex::Face cand = f;
        cand.push_back(v);
        if (k.contains(cand)) continue;
        bool boundary_present = true;
        for (std::size_t skip = 0; skip + 1 < cand.size() && boundary_present; ++skip) {
          SimplicialComplex::Face g;
          for (std::size_t i = 0; i < cand.size(); ++i)
            if (i != skip) g.push_back(cand[i]);
          boundary_present = k.contains(g);
        }
        if (boundary_present) return {false, cand};
      }
    }
  }
  return {};
}

}  // namespace nestobetti
