#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "powcol/game.hpp"
#include "powcol/monitor.hpp"

namespace powcol {

struct AliceOptions {
  // Opening vertex of the game; defaults to the lowest-indexed vertex.
  std::optional<Vertex> opening;
};

// Alice's activation strategies.
//
// Let v be Bob's last move and w the first vertex on the path from v to its root that was
// active before v was marked.
//   A1: v != w and w unmarked: mark w.
//   A2 (refined only): v != w, w marked, and some vertex on the path from w to the root is
//       unmarked: mark the one nearest to w.
//   B:  otherwise pick a component with an unmarked vertex, preferring the component of v
//       and then the lowest-indexed one. If it has a root, mark its unmarked vertex nearest
//       the root (lowest index on ties); otherwise open it at its lowest-indexed vertex.
class ActivationAlice final : public Strategy {
 public:
  enum class Variant { basic, refined };

  explicit ActivationAlice(Variant variant, AliceOptions options = {}) : variant_(variant), options_(options) {}

  std::string_view id() const override { return variant_ == Variant::refined ? "refined" : "basic"; }

  Choice choose(const GameState& s, Rng&) override {
    if (s.turn() != Player::alice) throw StateError(std::string(id()) + ": called on Bob's turn");
    if (s.finished()) throw StateError(std::string(id()) + ": no unmarked vertex left");
    if (s.move_count() == 0) return {opening_in(s, s.forest().component(opening(s))), Rule::first};

    const auto v = s.last_bob_move();
    const auto w = s.last_bob_anchor();
    if (v && w && *v != *w) {
      if (!s.marked(*w)) return {*w, Rule::a1};
      if (variant_ == Variant::refined) {
        for (auto x = s.parent(*w); x; x = s.parent(*x)) {
          if (!s.marked(*x)) return {*x, Rule::a2};
        }
      }
    }

    const Forest& f = s.forest();
    int target = -1;
    if (v && s.first_unmarked_in_component(f.component(*v))) target = f.component(*v);
    for (std::size_t c = 0; target < 0 && c < f.component_count(); ++c) {
      if (s.first_unmarked_in_component(static_cast<int>(c))) target = static_cast<int>(c);
    }
    if (const auto x = s.nearest_unmarked_to_root(target)) return {*x, Rule::b};
    return {opening_in(s, target), Rule::b};
  }

 private:
  Vertex opening(const GameState& s) const {
    if (options_.opening && !s.forest().contains(*options_.opening)) {
      throw StrategyFault(std::string(id()), "opening vertex " + std::to_string(*options_.opening) + " is out of range");
    }
    return options_.opening.value_or(0);
  }

  // Opening vertex of an unrooted component.
  Vertex opening_in(const GameState& s, int component) const {
    if (options_.opening && s.forest().contains(*options_.opening) &&
        s.forest().component(*options_.opening) == component && !s.marked(*options_.opening)) {
      return *options_.opening;
    }
    return *s.first_unmarked_in_component(component);
  }

  Variant variant_;
  AliceOptions options_;
};

// Marks the unmarked vertex with the most marked power-neighbours, lowest index on ties.
class GreedyAlice final : public Strategy {
 public:
  std::string_view id() const override { return "greedy-alice"; }

  Choice choose(const GameState& s, Rng&) override {
    Vertex best = -1;
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
      const auto u = static_cast<Vertex>(i);
      if (s.marked(u)) continue;
      if (best < 0 || s.marked_neighbours(u) > s.marked_neighbours(best)) best = u;
    }
    if (best < 0) throw StateError("greedy-alice: no unmarked vertex left");
    return {best, std::nullopt};
  }
};

// Uniform choice among unmarked vertices.
class RandomBob final : public Strategy {
 public:
  std::string_view id() const override { return "random"; }
  bool deterministic() const override { return false; }

  Choice choose(const GameState& s, Rng& rng) override {
    if (s.finished()) throw StateError("random: no unmarked vertex left");
    std::uint64_t k = uniform_below(rng, s.unmarked_count());
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
      const auto u = static_cast<Vertex>(i);
      if (s.marked(u)) continue;
      if (k-- == 0) return {u, std::nullopt};
    }
    throw StateError("random: unmarked count out of sync");
  }
};

// Marks the vertex v maximising  max_{u unmarked, u != v} |marked power-neighbours of u after v|,
// lowest index on ties.
class GreedyBob final : public Strategy {
 public:
  std::string_view id() const override { return "greedy"; }

  Choice choose(const GameState& s, Rng&) override {
    if (s.finished()) throw StateError("greedy: no unmarked vertex left");
    const PowerView& p = s.power();
    // Two largest counts among unmarked vertices, so "max over u != v" is O(1) per candidate.
    Vertex top = -1;
    int top_count = -1;
    int second_count = -1;
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
      const auto u = static_cast<Vertex>(i);
      if (s.marked(u)) continue;
      const int c = s.marked_neighbours(u);
      if (c > top_count) {
        second_count = top_count;
        top_count = c;
        top = u;
      } else if (c > second_count) {
        second_count = c;
      }
    }
    Vertex best = -1;
    int best_value = -2;
    for (std::size_t i = 0; i < s.vertex_count(); ++i) {
      const auto v = static_cast<Vertex>(i);
      if (s.marked(v)) continue;
      // Power-neighbours of v gain one; everyone else keeps their count.
      int value = v == top ? second_count : top_count;
      for (Vertex u : p.neighbours(v)) {
        if (!s.marked(u)) value = std::max(value, s.marked_neighbours(u) + 1);
      }
      if (value > best_value) {
        best_value = value;
        best = v;
      }
    }
    return {best, std::nullopt};
  }
};

inline std::unique_ptr<Strategy> alice_refined(AliceOptions o = {}) {
  return std::make_unique<ActivationAlice>(ActivationAlice::Variant::refined, o);
}
inline std::unique_ptr<Strategy> alice_basic(AliceOptions o = {}) {
  return std::make_unique<ActivationAlice>(ActivationAlice::Variant::basic, o);
}
inline std::unique_ptr<Strategy> bob_random() { return std::make_unique<RandomBob>(); }
inline std::unique_ptr<Strategy> bob_greedy() { return std::make_unique<GreedyBob>(); }

inline constexpr std::size_t kMaxExhaustiveVertices = 16;

struct ExhaustiveOptions {
  // Stop as soon as a line of play scores above this.
  std::optional<int> bound;
  // When set, check the one-marked-child property and this neighbour ceiling after every
  // Alice move reached by the search.
  std::optional<int> monitor_ceiling;
  // Share results between move orders that reach the same position.
  bool memoize = true;
};

struct ExhaustiveResult {
  int worst_score = 1;
  std::vector<Vertex> witness;    // ordering of a worst game, or the prefix that broke the bound
  std::vector<Vertex> bob_moves;  // Bob's moves within witness
  bool bound_exceeded = false;
  std::vector<MonitorViolation> violations;
  std::uint64_t nodes = 0;  // Bob moves tried
};

namespace detail {

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const PowerView& p, Strategy& alice, const ExhaustiveOptions& o)
      : p_(p), alice_(alice), options_(o), state_(p), cap_(p.max_degree()) {}

  ExhaustiveResult run() {
    ExhaustiveResult result;
    if (p_.vertex_count() == 0) return result;
    const int opening = alice_move();
    check_bound(opening, opening);
    const int future = stopped_ ? -1 : explore(opening);
    if (stopped_) {
      result.bound_exceeded = true;
      result.worst_score = stop_score_;
      result.witness = stop_witness_;
    } else {
      result.worst_score = 1 + std::max(opening, future);
      result.witness = principal_line();
    }
    for (std::size_t i = 1; i < result.witness.size(); i += 2) result.bob_moves.push_back(result.witness[i]);
    result.violations = std::move(violations_);
    result.nodes = nodes_;
    return result;
  }

 private:
  struct Entry {
    int future;
    Vertex best;
  };

  std::uint64_t key() const {
    std::uint64_t marked = 0;
    for (Vertex v : state_.order()) marked |= std::uint64_t{1} << v;
    std::uint64_t roots = 0;
    const Forest& f = state_.forest();
    for (std::size_t c = 0; c < f.component_count(); ++c) {
      if (auto r = state_.root(static_cast<int>(c))) roots |= std::uint64_t{1} << *r;
    }
    return marked | (roots << 32);
  }

  // Plays Alice's reply and returns its back degree.
  int alice_move() {
    const Choice c = alice_.choose(state_, rng_);
    if (c.vertex < 0 || static_cast<std::size_t>(c.vertex) >= state_.vertex_count() || state_.marked(c.vertex)) {
      throw StrategyFault(std::string(alice_.id()), "returned invalid vertex " + std::to_string(c.vertex));
    }
    const int back_degree = state_.marked_neighbours(c.vertex);
    state_.mark(Player::alice, c.vertex, c.rule);
    return back_degree;
  }

  void check_bound(int running, int future) {
    if (!options_.bound || stopped_ || 1 + std::max(running, future) <= *options_.bound) return;
    stopped_ = true;
    stop_score_ = 1 + std::max(running, future);
    stop_witness_.assign(state_.order().begin(), state_.order().end());
  }

  // Largest back degree Bob can still force from a position where it is his turn, -1 if the
  // game is over. running is the largest back degree so far.
  int explore(int running) {
    if (state_.finished()) return -1;
    const std::uint64_t k = key();
    if (options_.memoize) {
      if (auto it = table_.find(k); it != table_.end()) return it->second.future;
    }
    if (options_.monitor_ceiling) {
      if (auto v = check_one_marked_child(state_)) violations_.push_back(*v);
      if (auto v = check_neighbour_ceiling(state_, *options_.monitor_ceiling)) violations_.push_back(*v);
    }
    int best = -1;
    Vertex best_move = -1;
    for (std::size_t i = 0; i < state_.vertex_count() && !stopped_; ++i) {
      const auto v = static_cast<Vertex>(i);
      if (state_.marked(v)) continue;
      ++nodes_;
      int future = state_.marked_neighbours(v);
      state_.mark(Player::bob, v);
      if (state_.finished()) {
        check_bound(running, future);
      } else {
        future = std::max(future, alice_move());
        check_bound(running, future);
        if (!stopped_) future = std::max(future, explore(std::max(running, future)));
        state_.undo();
      }
      state_.undo();
      if (future > best) {
        best = future;
        best_move = v;
      }
      if (best >= cap_) break;
    }
    if (!stopped_) table_.insert_or_assign(k, Entry{best, best_move});
    return best;
  }

  // Replays the worst line found.
  std::vector<Vertex> principal_line() {
    state_ = GameState(p_);
    alice_move();
    while (!state_.finished()) {
      const auto it = table_.find(key());
      if (it == table_.end()) break;
      state_.mark(Player::bob, it->second.best);
      if (!state_.finished()) alice_move();
    }
    return {state_.order().begin(), state_.order().end()};
  }

  const PowerView& p_;
  Strategy& alice_;
  ExhaustiveOptions options_;
  GameState state_;
  Rng rng_{0};
  int cap_;
  std::unordered_map<std::uint64_t, Entry> table_;
  std::vector<MonitorViolation> violations_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  int stop_score_ = 0;
  std::vector<Vertex> stop_witness_;
};

}  // namespace detail

// Exact adversary against a fixed deterministic Alice: searches every sequence of Bob moves,
// with Alice's replies computed by her strategy, and returns the largest achievable score
// together with a witness line.
inline ExhaustiveResult bob_exhaustive(const PowerView& p, Strategy& alice, const ExhaustiveOptions& options = {}) {
  if (!alice.deterministic()) {
    throw InputError("bob_exhaustive: Alice strategy '" + std::string(alice.id()) + "' is not deterministic");
  }
  if (p.vertex_count() > kMaxExhaustiveVertices) {
    throw CapacityError("bob_exhaustive: " + std::to_string(p.vertex_count()) + " vertices exceed the cap of " +
                        std::to_string(kMaxExhaustiveVertices));
  }
  return detail::ExhaustiveSearch(p, alice, options).run();
}

}  // namespace powcol
