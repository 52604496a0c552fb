#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "powcol/forest.hpp"
#include "powcol/random.hpp"

namespace powcol {

enum class ForestKind { path, complete_dary, random_tree, random_forest };

inline std::string_view to_string(ForestKind k) {
  switch (k) {
    case ForestKind::path: return "path";
    case ForestKind::complete_dary: return "complete_dary";
    case ForestKind::random_tree: return "random_tree";
    case ForestKind::random_forest: return "random_forest";
  }
  return "?";
}

inline ForestKind parse_forest_kind(std::string_view s) {
  if (s == "path") return ForestKind::path;
  if (s == "complete_dary") return ForestKind::complete_dary;
  if (s == "random_tree") return ForestKind::random_tree;
  if (s == "random_forest") return ForestKind::random_forest;
  throw InputError("unknown forest kind '" + std::string(s) + "'");
}

inline bool is_random(ForestKind k) { return k == ForestKind::random_tree || k == ForestKind::random_forest; }

namespace detail {

// Sequential attachment: vertex i joins a uniformly chosen earlier vertex that still has
// residual degree. With new_component_odds > 0, vertex i instead starts a fresh component
// with probability 1 / new_component_odds.
inline Forest attach_sequentially(int n, int max_degree, std::uint64_t seed, std::uint64_t new_component_odds) {
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> open;  // vertices with residual degree
  std::vector<int> degree(n, 0);
  open.push_back(0);
  for (Vertex i = 1; i < n; ++i) {
    const bool fresh = new_component_odds > 0 && uniform_below(rng, new_component_odds) == 0;
    if (!fresh) {
      const std::size_t pick = uniform_below(rng, open.size());
      const Vertex p = open[pick];
      edges.push_back({p, i});
      if (++degree[p] == max_degree) {
        open[pick] = open.back();
        open.pop_back();
      }
      ++degree[i];
    }
    if (degree[i] < max_degree) open.push_back(i);
  }
  return Forest::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace detail

// Test-instance supply. Random kinds are a pure function of (kind, n, max_degree, seed).
// complete_dary: root 0 has max_degree children and every other internal vertex has
// max_degree - 1 children, numbered breadth-first and truncated at n vertices.
// random_forest: like random_tree, but each new vertex starts its own component with
// probability 1/4.
inline Forest generate(ForestKind kind, int n, int max_degree, std::uint64_t seed) {
  if (n < 1) throw InputError("generate: n must be at least 1");
  if (kind != ForestKind::path) {
    if (n > 2 && max_degree < 2) throw InputError("generate: n > 2 requires max_degree >= 2");
    if (n == 2 && max_degree < 1 && kind != ForestKind::random_forest) {
      throw InputError("generate: n = 2 requires max_degree >= 1");
    }
  }
  switch (kind) {
    case ForestKind::path: {
      std::vector<Edge> edges;
      for (Vertex i = 1; i < n; ++i) edges.push_back({i - 1, i});
      return Forest::from_edges(static_cast<std::size_t>(n), edges);
    }
    case ForestKind::complete_dary: {
      std::vector<Edge> edges;
      Vertex parent = 0;
      int taken = 0;
      for (Vertex i = 1; i < n; ++i) {
        const int capacity = parent == 0 ? max_degree : max_degree - 1;
        if (taken == capacity) {
          ++parent;
          taken = 0;
        }
        edges.push_back({parent, i});
        ++taken;
      }
      return Forest::from_edges(static_cast<std::size_t>(n), edges);
    }
    case ForestKind::random_tree:
      return detail::attach_sequentially(n, max_degree, seed, 0);
    case ForestKind::random_forest:
      return detail::attach_sequentially(n, max_degree, seed, 4);
  }
  throw InputError("generate: unknown kind");
}

}  // namespace powcol
