#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "powcol/error.hpp"

namespace powcol {

using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  // Orientation-free canonical form (min, max).
  Edge canonical() const { return u <= v ? *this : Edge{v, u}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An undirected acyclic simple graph on vertices 0..n-1.
//
// Components are discovered by traversal and numbered in order of their lowest vertex,
// so component 0 always contains vertex 0. Immutable after construction.
class Forest {
 public:
  Forest() = default;

  // Throws InputError on out-of-range endpoints, self-loops, duplicate edges, or cycles.
  static Forest from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Forest f;
    f.adjacency_.assign(vertex_count, {});
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= vertex_count ||
          static_cast<std::size_t>(e.v) >= vertex_count) {
        throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " references a vertex outside 0.." + std::to_string(vertex_count));
      }
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      f.adjacency_[e.u].push_back(e.v);
      f.adjacency_[e.v].push_back(e.u);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
      auto& nb = f.adjacency_[v];
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
        throw InputError("duplicate edge at vertex " + std::to_string(v));
      }
      f.max_degree_ = std::max(f.max_degree_, static_cast<int>(nb.size()));
    }
    f.discover_components();
    if (edges.size() + f.component_count() != vertex_count) {
      throw InputError("edge set contains a cycle");
    }
    return f;
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return vertex_count() - component_count(); }
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const { return max_degree_; }

  int component(Vertex v) const { return component_id_[v]; }
  std::size_t component_count() const { return component_offset_.empty() ? 0 : component_offset_.size() - 1; }

  // Vertices of component c in increasing order.
  std::span<const Vertex> component_vertices(int c) const {
    return std::span<const Vertex>(component_members_)
        .subspan(component_offset_[c], component_offset_[c + 1] - component_offset_[c]);
  }
  std::size_t component_offset(int c) const { return component_offset_[c]; }

  // Edges as (min, max) pairs, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < vertex_count(); ++u) {
      for (Vertex w : adjacency_[u]) {
        if (static_cast<Vertex>(u) < w) out.push_back({static_cast<Vertex>(u), w});
      }
    }
    return out;
  }

  friend bool operator==(const Forest& a, const Forest& b) { return a.adjacency_ == b.adjacency_; }

 private:
  void discover_components() {
    const std::size_t n = vertex_count();
    component_id_.assign(n, -1);
    component_offset_.assign(1, 0);
    std::vector<std::vector<Vertex>> members;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
      if (component_id_[s] != -1) continue;
      const int c = static_cast<int>(members.size());
      members.emplace_back();
      component_id_[s] = c;
      stack.assign(1, static_cast<Vertex>(s));
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        members.back().push_back(x);
        for (Vertex y : adjacency_[x]) {
          if (component_id_[y] == -1) {
            component_id_[y] = c;
            stack.push_back(y);
          }
        }
      }
    }
    component_members_.clear();
    component_members_.reserve(n);
    for (auto& m : members) {
      std::sort(m.begin(), m.end());
      component_members_.insert(component_members_.end(), m.begin(), m.end());
      component_offset_.push_back(component_members_.size());
    }
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> component_id_;
  std::vector<Vertex> component_members_;
  std::vector<std::size_t> component_offset_;
  int max_degree_ = 0;
};

// Number of edges on the unique path from u to v, or nullopt when they lie in different
// components.
inline std::optional<int> distance(const Forest& f, Vertex u, Vertex v) {
  if (!f.contains(u) || !f.contains(v)) {
    throw InputError("distance: vertex index out of range");
  }
  if (f.component(u) != f.component(v)) return std::nullopt;
  if (u == v) return 0;
  std::vector<int> dist(f.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (Vertex y : f.neighbours(x)) {
      if (dist[y] != -1) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      q.push(y);
    }
  }
  return std::nullopt;
}

}  // namespace powcol
