#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powcol/error.hpp"
#include "powcol/power.hpp"
#include "powcol/random.hpp"

namespace powcol {

enum class Player : std::uint8_t { alice, bob };

inline Player opponent(Player p) { return p == Player::alice ? Player::bob : Player::alice; }
inline std::string_view to_string(Player p) { return p == Player::alice ? "A" : "B"; }

// Which case of an activation strategy produced an Alice move. Advisory metadata only.
enum class Rule : std::uint8_t { first, a1, a2, b };

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::first: return "first";
    case Rule::a1: return "A1";
    case Rule::a2: return "A2";
    case Rule::b: return "B";
  }
  return "?";
}

struct MoveRecord {
  int index = 0;  // 1-based
  Player player = Player::alice;
  Vertex vertex = -1;
  std::optional<Rule> rule;
  std::vector<Vertex> activated;  // newly activated, from the marked vertex toward the root
  int back_degree = 0;            // marked power-neighbours of vertex when it was marked

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

// Position of a marking game on a power of a forest, with the activation bookkeeping.
//
// Once the first vertex of a component is marked it becomes the root of that component and
// the whole component is oriented toward it (parent, depth). Every later mark activates the
// inactive vertices on the path from the marked vertex to the root, for either player, so
// marked vertices are always active and the active vertices of a component form a subtree
// containing its root.
//
// apply() and undo() are exact inverses; undo() lets exhaustive searches walk the game tree
// without copying positions. The PowerView must outlive the state.
class GameState {
 public:
  explicit GameState(const PowerView& power)
      : power_(&power),
        cells_(power.vertex_count()),
        roots_(power.base().component_count(), -1) {
    const Forest& f = power.base();
    ranked_.reserve(f.vertex_count());
    for (std::size_t c = 0; c < f.component_count(); ++c) {
      auto members = f.component_vertices(static_cast<int>(c));
      ranked_.insert(ranked_.end(), members.begin(), members.end());
    }
  }

  const PowerView& power() const { return *power_; }
  const Forest& forest() const { return power_->base(); }
  std::size_t vertex_count() const { return cells_.size(); }

  bool marked(Vertex v) const { return cells_[v].marked; }
  bool active(Vertex v) const { return cells_[v].active; }
  // Marked power-neighbours of v in the current position.
  int marked_neighbours(Vertex v) const { return cells_[v].threat; }

  std::optional<Vertex> root(int component) const {
    const Vertex r = roots_[component];
    return r < 0 ? std::nullopt : std::optional<Vertex>(r);
  }
  bool rooted(Vertex v) const { return roots_[forest().component(v)] >= 0; }
  // Predecessor toward the component root; nullopt for the root and for unrooted components.
  std::optional<Vertex> parent(Vertex v) const {
    const Vertex p = cells_[v].parent;
    return p < 0 ? std::nullopt : std::optional<Vertex>(p);
  }
  // Distance from the component root, or -1 when the component has no root yet.
  int depth(Vertex v) const { return cells_[v].depth; }

  // Children of v in its rooted component tree (not only active ones).
  std::vector<Vertex> children(Vertex v) const {
    std::vector<Vertex> out;
    if (!rooted(v)) return out;
    for (Vertex y : forest().neighbours(v)) {
      if (cells_[y].parent == v) out.push_back(y);
    }
    return out;
  }

  // Vertices of a rooted component ordered by (depth, index).
  std::span<const Vertex> ranked_component(int component) const {
    const Forest& f = forest();
    return std::span<const Vertex>(ranked_).subspan(f.component_offset(component),
                                                    f.component_vertices(component).size());
  }

  // Unmarked vertex of a rooted component at minimum distance from its root, lowest index first.
  std::optional<Vertex> nearest_unmarked_to_root(int component) const {
    if (roots_[component] < 0) return std::nullopt;
    for (Vertex v : ranked_component(component)) {
      if (!cells_[v].marked) return v;
    }
    return std::nullopt;
  }

  std::optional<Vertex> first_unmarked_in_component(int component) const {
    for (Vertex v : forest().component_vertices(component)) {
      if (!cells_[v].marked) return v;
    }
    return std::nullopt;
  }

  std::span<const Vertex> order() const { return order_; }
  std::size_t move_count() const { return order_.size(); }
  std::size_t unmarked_count() const { return cells_.size() - order_.size(); }
  bool finished() const { return order_.size() == cells_.size(); }
  Player turn() const { return turn_; }

  std::optional<Vertex> last_bob_move() const {
    return last_bob_ < 0 ? std::nullopt : std::optional<Vertex>(last_bob_);
  }
  // First active vertex on the path from Bob's last move to its root, evaluated against the
  // active set as it was before that move's activation.
  std::optional<Vertex> last_bob_anchor() const {
    return anchor_ < 0 ? std::nullopt : std::optional<Vertex>(anchor_);
  }

  // 1 + the largest back degree among the vertices marked so far.
  int running_score() const { return 1 + max_back_degree_; }

  // Marks v for player. Throws RuleViolation for out-of-range or marked vertices and for
  // moves out of turn.
  const MoveRecord& apply(Player player, Vertex v, std::optional<Rule> rule = std::nullopt) {
    mark(player, v, rule);
    last_record_ = record(order_.size() - 1);
    return last_record_;
  }

  // As apply() but without materialising a MoveRecord.
  void mark(Player player, Vertex v, std::optional<Rule> rule = std::nullopt) {
    if (v < 0 || static_cast<std::size_t>(v) >= cells_.size()) {
      throw RuleViolation("vertex " + std::to_string(v) + " is not a vertex of the graph");
    }
    if (cells_[v].marked) throw RuleViolation("vertex " + std::to_string(v) + " is already marked");
    if (player != turn_) {
      throw RuleViolation(std::string("it is not ") + (player == Player::alice ? "Alice" : "Bob") + "'s turn");
    }
    const int back_degree = cells_[v].threat;
    steps_.push_back(Step{player, player == Player::alice ? rule : std::nullopt, last_bob_, anchor_,
                          max_back_degree_, activation_log_.size(), back_degree});

    const int comp = forest().component(v);
    Vertex anchor = v;
    if (roots_[comp] < 0) {
      make_root(comp, v);
      activate(v);
    } else {
      while (!cells_[anchor].active) anchor = cells_[anchor].parent;
      for (Vertex x = v; x != anchor; x = cells_[x].parent) activate(x);
    }
    if (player == Player::bob) {
      last_bob_ = v;
      anchor_ = anchor;
    }

    cells_[v].marked = true;
    order_.push_back(v);
    for (Vertex u : power_->neighbours(v)) ++cells_[u].threat;
    max_back_degree_ = std::max(max_back_degree_, back_degree);
    turn_ = opponent(turn_);
  }

  // Reverts the most recent move.
  void undo() {
    if (order_.empty()) throw StateError("undo: no move to revert");
    const Step step = steps_.back();
    const Vertex v = order_.back();
    for (Vertex u : power_->neighbours(v)) --cells_[u].threat;
    cells_[v].marked = false;
    for (std::size_t i = step.activation_begin; i < activation_log_.size(); ++i) {
      cells_[activation_log_[i]].active = false;
    }
    activation_log_.resize(step.activation_begin);
    const int comp = forest().component(v);
    if (roots_[comp] == v) clear_root(comp);
    last_bob_ = step.prev_last_bob;
    anchor_ = step.prev_anchor;
    max_back_degree_ = step.prev_max_back_degree;
    turn_ = opponent(turn_);
    order_.pop_back();
    steps_.pop_back();
  }

  // MoveRecord of move i (0-based).
  MoveRecord record(std::size_t i) const {
    const Step& s = steps_[i];
    const std::size_t end = i + 1 < steps_.size() ? steps_[i + 1].activation_begin : activation_log_.size();
    MoveRecord r;
    r.index = static_cast<int>(i) + 1;
    r.player = s.player;
    r.vertex = order_[i];
    r.rule = s.rule;
    r.activated.assign(activation_log_.begin() + static_cast<std::ptrdiff_t>(s.activation_begin),
                       activation_log_.begin() + static_cast<std::ptrdiff_t>(end));
    r.back_degree = s.back_degree;
    return r;
  }

  std::vector<MoveRecord> records() const {
    std::vector<MoveRecord> out;
    out.reserve(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) out.push_back(record(i));
    return out;
  }

  // Checks every structural invariant; throws StateError describing the first breach.
  void validate() const {
    const Forest& f = forest();
    const std::size_t n = cells_.size();
    auto fail = [](const std::string& what) { throw StateError("invalid game state: " + what); };
    std::vector<char> seen(n, 0);
    for (Vertex v : order_) {
      if (seen[v]) fail("vertex " + std::to_string(v) + " occurs twice in the order");
      seen[v] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = static_cast<Vertex>(i);
      const Cell& c = cells_[v];
      if (c.marked != static_cast<bool>(seen[v])) fail("marked set differs from the order at " + std::to_string(v));
      if (c.marked && !c.active) fail("marked vertex " + std::to_string(v) + " is inactive");
      const Vertex r = roots_[f.component(v)];
      if (r < 0) {
        if (c.active || c.parent >= 0 || c.depth >= 0) fail("unrooted component holds bookkeeping at " + std::to_string(v));
      } else if (v == r) {
        if (!c.active || c.parent >= 0 || c.depth != 0) fail("root " + std::to_string(v) + " is malformed");
      } else {
        if (c.parent < 0 || cells_[c.parent].depth != c.depth - 1) fail("parent chain broken at " + std::to_string(v));
        if (!std::binary_search(f.neighbours(v).begin(), f.neighbours(v).end(), c.parent)) {
          fail("parent of " + std::to_string(v) + " is not a forest neighbour");
        }
        if (c.active && !cells_[c.parent].active) fail("active set is not a rooted subtree at " + std::to_string(v));
      }
      int threat = 0;
      for (Vertex u : power_->neighbours(v)) threat += cells_[u].marked ? 1 : 0;
      if (threat != c.threat) fail("marked-neighbour count stale at " + std::to_string(v));
    }
    if (turn_ != (order_.size() % 2 == 0 ? Player::alice : Player::bob)) fail("turn does not alternate");
  }

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.power_ == b.power_ && a.cells_ == b.cells_ && a.roots_ == b.roots_ && a.ranked_ == b.ranked_ &&
           a.order_ == b.order_ && a.steps_ == b.steps_ && a.activation_log_ == b.activation_log_ &&
           a.turn_ == b.turn_ && a.last_bob_ == b.last_bob_ && a.anchor_ == b.anchor_ &&
           a.max_back_degree_ == b.max_back_degree_;
  }

 private:
  struct Cell {
    bool marked = false;
    bool active = false;
    Vertex parent = -1;
    int depth = -1;
    int threat = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  struct Step {
    Player player;
    std::optional<Rule> rule;
    Vertex prev_last_bob;
    Vertex prev_anchor;
    int prev_max_back_degree;
    std::size_t activation_begin;
    int back_degree;

    friend bool operator==(const Step&, const Step&) = default;
  };

  void activate(Vertex x) {
    cells_[x].active = true;
    activation_log_.push_back(x);
  }

  void make_root(int comp, Vertex r) {
    const Forest& f = forest();
    roots_[comp] = r;
    const std::size_t begin = f.component_offset(comp);
    const std::size_t size = f.component_vertices(comp).size();
    // Breadth-first from the root, then sorted by (depth, index).
    std::size_t write = begin;
    ranked_[write++] = r;
    cells_[r].parent = -1;
    cells_[r].depth = 0;
    for (std::size_t read = begin; read < begin + size; ++read) {
      const Vertex x = ranked_[read];
      for (Vertex y : f.neighbours(x)) {
        if (y == cells_[x].parent) continue;
        cells_[y].parent = x;
        cells_[y].depth = cells_[x].depth + 1;
        ranked_[write++] = y;
      }
    }
    std::stable_sort(ranked_.begin() + static_cast<std::ptrdiff_t>(begin),
                     ranked_.begin() + static_cast<std::ptrdiff_t>(begin + size), [&](Vertex a, Vertex b) {
                       return cells_[a].depth != cells_[b].depth ? cells_[a].depth < cells_[b].depth : a < b;
                     });
  }

  void clear_root(int comp) {
    const Forest& f = forest();
    roots_[comp] = -1;
    auto members = f.component_vertices(comp);
    std::copy(members.begin(), members.end(), ranked_.begin() + static_cast<std::ptrdiff_t>(f.component_offset(comp)));
    for (Vertex x : members) {
      cells_[x].parent = -1;
      cells_[x].depth = -1;
    }
  }

  const PowerView* power_;
  std::vector<Cell> cells_;
  std::vector<Vertex> roots_;
  std::vector<Vertex> ranked_;
  std::vector<Vertex> order_;
  std::vector<Step> steps_;
  std::vector<Vertex> activation_log_;
  Player turn_ = Player::alice;
  Vertex last_bob_ = -1;
  Vertex anchor_ = -1;
  int max_back_degree_ = 0;
  MoveRecord last_record_;
};

inline MoveRecord apply_move(GameState& s, Player player, Vertex v, std::optional<Rule> rule = std::nullopt) {
  return s.apply(player, v, rule);
}

// First active vertex on the path from v toward its component root, v itself when active.
// Uses the current active set; call before marking v to get the pre-activation anchor.
inline Vertex first_active_on_path(const GameState& s, Vertex v) {
  if (!s.forest().contains(v)) throw InputError("first_active_on_path: vertex index out of range");
  if (!s.rooted(v)) throw StateError("first_active_on_path: component of " + std::to_string(v) + " has no root");
  Vertex x = v;
  while (!s.active(x)) x = *s.parent(x);
  return x;
}

struct ScoreReport {
  std::vector<Vertex> ordering;
  std::vector<int> back_degrees;  // indexed by vertex
  int score = 1;
};

namespace detail {

inline std::vector<int> positions(std::size_t n, std::span<const Vertex> ordering) {
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const Vertex v = ordering[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("ordering contains an invalid vertex");
    if (pos[v] != -1) throw InputError("ordering repeats vertex " + std::to_string(v));
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

}  // namespace detail

// Power-neighbours of v that precede v in ordering.
inline int back_degree(const PowerView& p, std::span<const Vertex> ordering, Vertex v) {
  const auto pos = detail::positions(p.vertex_count(), ordering);
  if (v < 0 || static_cast<std::size_t>(v) >= p.vertex_count() || pos[v] < 0) {
    throw InputError("back_degree: vertex " + std::to_string(v) + " is not in the ordering");
  }
  int count = 0;
  for (Vertex u : p.neighbours(v)) count += (pos[u] >= 0 && pos[u] < pos[v]) ? 1 : 0;
  return count;
}

inline ScoreReport score(const PowerView& p, std::span<const Vertex> ordering) {
  const std::size_t n = p.vertex_count();
  if (ordering.size() != n) throw InputError("score: ordering is not a permutation of all vertices");
  const auto pos = detail::positions(n, ordering);
  ScoreReport r;
  r.ordering.assign(ordering.begin(), ordering.end());
  r.back_degrees.assign(n, 0);
  int worst = 0;
  for (std::size_t v = 0; v < n; ++v) {
    int count = 0;
    for (Vertex u : p.neighbours(static_cast<Vertex>(v))) count += pos[u] < pos[v] ? 1 : 0;
    r.back_degrees[v] = count;
    worst = std::max(worst, count);
  }
  r.score = 1 + worst;
  return r;
}

struct Choice {
  Vertex vertex = -1;
  std::optional<Rule> rule;
};

// A move chooser for one player.
//
// choose() must return an unmarked vertex whenever one exists. Deterministic strategies
// ignore rng. bob_exhaustive additionally requires that a deterministic strategy's choice is
// a function of the position (marked, active and rooted structure, and Bob's last move),
// not of the order in which earlier moves were made.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string_view id() const = 0;
  virtual bool deterministic() const { return true; }
  virtual Choice choose(const GameState& s, Rng& rng) = 0;
};

using MoveObserver = std::function<void(const GameState&, const MoveRecord&)>;

// Plays a complete game, Alice first, strictly alternating, until every vertex is marked.
// observer, when set, sees every move in order together with the resulting position.
inline ScoreReport play(const PowerView& p, Strategy& alice, Strategy& bob, std::uint64_t seed = 0,
                        const MoveObserver& observer = {}) {
  GameState s(p);
  Rng rng(seed);
  while (!s.finished()) {
    const Player who = s.turn();
    Strategy& strategy = who == Player::alice ? alice : bob;
    const Choice c = strategy.choose(s, rng);
    if (c.vertex < 0 || static_cast<std::size_t>(c.vertex) >= s.vertex_count()) {
      throw StrategyFault(std::string(strategy.id()), "returned invalid vertex " + std::to_string(c.vertex));
    }
    if (s.marked(c.vertex)) {
      throw StrategyFault(std::string(strategy.id()), "returned marked vertex " + std::to_string(c.vertex));
    }
    const MoveRecord& rec = s.apply(who, c.vertex, who == Player::alice ? c.rule : std::nullopt);
    if (observer) observer(s, rec);
  }
  return score(p, s.order());
}

}  // namespace powcol
