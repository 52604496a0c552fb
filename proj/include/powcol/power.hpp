#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <vector>

#include "powcol/forest.hpp"

namespace powcol {

// The m-th power of a forest: u and v are adjacent iff 1 <= dist(u, v) <= m in the base.
//
// Neighbour lists are materialised once and sorted; the game engine reads them on every
// move. Immutable after construction and safe to share between threads.
class PowerView {
 public:
  PowerView(std::shared_ptr<const Forest> base, int radius, std::vector<std::vector<Vertex>> adjacency)
      : base_(std::move(base)), radius_(radius), adjacency_(std::move(adjacency)) {
    for (const auto& nb : adjacency_) max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
  }

  const Forest& base() const { return *base_; }
  const std::shared_ptr<const Forest>& base_ptr() const { return base_; }
  int radius() const { return radius_; }
  std::size_t vertex_count() const { return adjacency_.size(); }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const { return max_degree_; }

  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
      for (Vertex w : adjacency_[u]) {
        if (static_cast<Vertex>(u) < w) out.push_back({static_cast<Vertex>(u), w});
      }
    }
    return out;
  }

 private:
  std::shared_ptr<const Forest> base_;
  int radius_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  int max_degree_ = 0;
};

// Breadth-first search from every vertex, truncated at depth m.
inline PowerView build_power(std::shared_ptr<const Forest> f, int m) {
  if (!f) throw InputError("build_power: null forest");
  if (m < 0) throw InputError("build_power: radius must be non-negative");
  const std::size_t n = f->vertex_count();
  std::vector<std::vector<Vertex>> adjacency(n);
  if (m > 0) {
    // Forest paths are unique, so tracking the predecessor is enough to avoid revisits.
    struct Item {
      Vertex v;
      Vertex from;
      int depth;
    };
    std::vector<Item> frontier;
    for (std::size_t s = 0; s < n; ++s) {
      auto& ball = adjacency[s];
      frontier.assign(1, Item{static_cast<Vertex>(s), -1, 0});
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        const Item it = frontier[i];
        if (it.depth == m) continue;
        for (Vertex y : f->neighbours(it.v)) {
          if (y == it.from) continue;
          ball.push_back(y);
          frontier.push_back(Item{y, it.v, it.depth + 1});
        }
      }
      std::sort(ball.begin(), ball.end());
    }
  }
  return PowerView(std::move(f), m, std::move(adjacency));
}

inline PowerView build_power(const Forest& f, int m) {
  return build_power(std::make_shared<const Forest>(f), m);
}

}  // namespace powcol
