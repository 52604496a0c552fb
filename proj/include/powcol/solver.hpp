#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "powcol/game.hpp"

namespace powcol {

inline constexpr std::size_t kMaxSolverVertices = 24;

// The marking game as a win/loss game for a fixed score bound s.
//
// The final score is at most s iff no vertex is marked while s or more of its power-neighbours
// are marked. Marked-neighbour counts only grow, so once an unmarked vertex has s marked
// power-neighbours the bound is lost whatever happens next. A position is therefore just the
// marked set (whose size fixes the player to move), and results are memoised on it.
class ThresholdGame {
 public:
  ThresholdGame(const PowerView& p, int s) : s_(s), n_(p.vertex_count()) {
    if (n_ > kMaxSolverVertices) {
      throw CapacityError("exact solver: " + std::to_string(n_) + " vertices exceed the cap of " +
                          std::to_string(kMaxSolverVertices));
    }
    neighbours_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      for (Vertex u : p.neighbours(static_cast<Vertex>(v))) neighbours_[v] |= std::uint64_t{1} << u;
    }
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  int threshold() const { return s_; }
  std::uint64_t nodes_expanded() const { return nodes_; }

  // True iff Alice, to move when the popcount of marked is even, keeps the score <= s.
  bool alice_wins(std::uint64_t marked = 0) {
    if (s_ < 1) return false;
    return solve(marked);
  }

  // A move from marked that keeps the result for the player to move, or -1 if none.
  // For Alice that means a winning move; for Bob a move that defeats Alice.
  Vertex good_move(std::uint64_t marked) {
    const bool alice = std::popcount(marked) % 2 == 0;
    for (Vertex v : ordered_moves(marked)) {
      const bool wins = alice_wins(marked | (std::uint64_t{1} << v));
      if (wins == alice) return v;
    }
    return -1;
  }

 private:
  int threat(std::uint64_t marked, std::size_t v) const { return std::popcount(neighbours_[v] & marked); }

  bool lost(std::uint64_t marked) const {
    for (std::size_t v = 0; v < n_; ++v) {
      if (!(marked >> v & 1) && threat(marked, v) >= s_) return true;
    }
    return false;
  }

  // Unmarked vertices, those next to the most threatened unmarked vertices first.
  std::vector<Vertex> ordered_moves(std::uint64_t marked) const {
    std::vector<std::pair<int, Vertex>> scored;
    for (std::size_t v = 0; v < n_; ++v) {
      if (marked >> v & 1) continue;
      int pressure = 0;
      for (std::uint64_t rest = neighbours_[v] & ~marked; rest; rest &= rest - 1) {
        pressure = std::max(pressure, threat(marked, static_cast<std::size_t>(std::countr_zero(rest))));
      }
      scored.emplace_back(-pressure, static_cast<Vertex>(v));
    }
    std::sort(scored.begin(), scored.end());
    std::vector<Vertex> out;
    out.reserve(scored.size());
    for (const auto& [_, v] : scored) out.push_back(v);
    return out;
  }

  bool solve(std::uint64_t marked) {
    if (marked == full_) return true;
    if (lost(marked)) return false;
    if (auto it = memo_.find(marked); it != memo_.end()) return it->second;
    ++nodes_;
    const bool alice = std::popcount(marked) % 2 == 0;
    bool result = !alice;
    for (Vertex v : ordered_moves(marked)) {
      if (solve(marked | (std::uint64_t{1} << v)) == alice) {
        result = alice;
        break;
      }
    }
    memo_.emplace(marked, result);
    return result;
  }

  int s_;
  std::size_t n_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> neighbours_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::uint64_t nodes_ = 0;
};

// True iff Alice, moving first, can keep the score at most s.
inline bool alice_wins(const PowerView& p, int s) { return ThresholdGame(p, s).alice_wins(); }

struct SolverResult {
  int value = 1;                          // game colouring number
  std::vector<Vertex> principal_variation;  // one optimal line for both players
  std::uint64_t nodes_expanded = 0;
};

// Game colouring number: the least s that Alice wins, scanning up from 1.
inline SolverResult exact_colg(const PowerView& p) {
  if (p.vertex_count() > kMaxSolverVertices) {
    throw CapacityError("exact solver: " + std::to_string(p.vertex_count()) + " vertices exceed the cap of " +
                        std::to_string(kMaxSolverVertices));
  }
  SolverResult r;
  ThresholdGame below(p, 0);
  for (int s = 1;; ++s) {
    ThresholdGame game(p, s);
    const bool wins = game.alice_wins();
    r.nodes_expanded += game.nodes_expanded();
    if (!wins) {
      below = std::move(game);
      continue;
    }
    r.value = s;
    // Alice keeps the score <= value; Bob keeps it >= value by staying on lines that Alice
    // loses at value - 1. Both are always available along such a line.
    std::uint64_t marked = 0;
    const std::size_t n = p.vertex_count();
    for (std::size_t i = 0; i < n; ++i) {
      const bool alice = i % 2 == 0;
      Vertex v = alice ? game.good_move(marked) : below.good_move(marked);
      if (v < 0) v = static_cast<Vertex>(std::countr_one(marked));
      r.principal_variation.push_back(v);
      marked |= std::uint64_t{1} << v;
    }
    return r;
  }
}

// Alice playing the solver's optimal line: at each turn a move that keeps the score within
// the game colouring number.
class OptimalAlice final : public Strategy {
 public:
  explicit OptimalAlice(const PowerView& p) : game_(p, exact_colg(p).value) {}

  std::string_view id() const override { return "optimal"; }
  int target() const { return game_.threshold(); }

  Choice choose(const GameState& s, Rng&) override {
    std::uint64_t marked = 0;
    for (Vertex v : s.order()) marked |= std::uint64_t{1} << v;
    Vertex v = game_.alice_wins(marked) ? game_.good_move(marked) : -1;
    if (v < 0) {
      // Already off the optimal line; any move will do.
      v = static_cast<Vertex>(std::countr_one(marked));
    }
    return {v, std::nullopt};
  }

 private:
  ThresholdGame game_;
};

}  // namespace powcol
