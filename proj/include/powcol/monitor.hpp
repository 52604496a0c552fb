#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powcol/bounds.hpp"
#include "powcol/game.hpp"

namespace powcol {

struct MonitorViolation {
  std::string monitor;  // "one-marked-child", "neighbour-ceiling" or "bob-increment"
  int move = 0;         // 1-based index of the move after which the breach was seen
  Vertex vertex = -1;
  int observed = 0;
  int limit = 0;

  std::string describe() const {
    return monitor + " at move " + std::to_string(move) + ": vertex " + std::to_string(vertex) + " has " +
           std::to_string(observed) + " (limit " + std::to_string(limit) + ")";
  }
};

// After an Alice move of the refined strategy, every unmarked vertex u has at most one child
// whose rooted subtree (child included) contains a marked vertex.
inline std::optional<MonitorViolation> check_one_marked_child(const GameState& s) {
  const Forest& f = s.forest();
  std::vector<char> holds_mark(f.vertex_count(), 0);
  std::vector<int> marked_children(f.vertex_count(), 0);
  for (std::size_t c = 0; c < f.component_count(); ++c) {
    if (!s.root(static_cast<int>(c))) continue;
    const auto ranked = s.ranked_component(static_cast<int>(c));
    for (auto it = ranked.rbegin(); it != ranked.rend(); ++it) {
      const Vertex x = *it;
      if (s.marked(x)) holds_mark[x] = 1;
      if (holds_mark[x]) {
        if (const auto p = s.parent(x)) {
          holds_mark[*p] = 1;
          ++marked_children[*p];
        }
      }
    }
  }
  for (std::size_t i = 0; i < f.vertex_count(); ++i) {
    const auto u = static_cast<Vertex>(i);
    if (!s.marked(u) && marked_children[u] > 1) {
      return MonitorViolation{"one-marked-child", static_cast<int>(s.move_count()), u, marked_children[u], 1};
    }
  }
  return std::nullopt;
}

// Every unmarked vertex has at most ceiling marked power-neighbours.
inline std::optional<MonitorViolation> check_neighbour_ceiling(const GameState& s, int ceiling) {
  for (std::size_t i = 0; i < s.vertex_count(); ++i) {
    const auto u = static_cast<Vertex>(i);
    if (!s.marked(u) && s.marked_neighbours(u) > ceiling) {
      return MonitorViolation{"neighbour-ceiling", static_cast<int>(s.move_count()), u, s.marked_neighbours(u), ceiling};
    }
  }
  return std::nullopt;
}

// The invariant ceiling M_m for a forest of maximum degree delta. Forests of maximum degree
// below 3 are covered by the delta = 3 value, since the ceiling is monotone in delta.
inline int neighbour_ceiling(int delta, int m) {
  return static_cast<int>(bound_mm(BoundParams{delta < 3 ? 3 : delta, m}));
}

// Runtime monitor for games where Alice plays the refined activation strategy.
//
// After each Alice move it checks the one-marked-child property and the M_m ceiling; after
// each Bob move it checks that no unmarked vertex gained more than one marked neighbour
// since the preceding Alice move.
class InvariantMonitor {
 public:
  explicit InvariantMonitor(int ceiling) : ceiling_(ceiling) {}

  void operator()(const GameState& s, const MoveRecord& r) {
    if (r.player == Player::alice) {
      if (auto v = check_one_marked_child(s)) violations_.push_back(*v);
      if (auto v = check_neighbour_ceiling(s, ceiling_)) violations_.push_back(*v);
      snapshot_.resize(s.vertex_count());
      for (std::size_t i = 0; i < s.vertex_count(); ++i) snapshot_[i] = s.marked_neighbours(static_cast<Vertex>(i));
      return;
    }
    if (snapshot_.empty()) return;
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
      const auto u = static_cast<Vertex>(i);
      const int gained = s.marked_neighbours(u) - snapshot_[i];
      if (!s.marked(u) && gained > 1) {
        violations_.push_back(MonitorViolation{"bob-increment", r.index, u, gained, 1});
      }
    }
  }

  MoveObserver observer() {
    return [this](const GameState& s, const MoveRecord& r) { (*this)(s, r); };
  }

  const std::vector<MonitorViolation>& violations() const { return violations_; }
  int ceiling() const { return ceiling_; }

 private:
  int ceiling_;
  std::vector<int> snapshot_;
  std::vector<MonitorViolation> violations_;
};

}  // namespace powcol
