#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "powcol/enumerate.hpp"
#include "powcol/generate.hpp"
#include "powcol/monitor.hpp"
#include "powcol/solver.hpp"
#include "powcol/strategies.hpp"

namespace powcol {
namespace {

using testing::path_forest;

Forest hand_trace_tree() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 6}, {3, 8}, {2, 7}, {1, 5}};
  return Forest::from_edges(9, edges);
}

// Plays Alice's strategy against the given Bob moves and returns Alice's choices.
std::vector<Choice> alice_replies(const PowerView& p, Strategy& alice, const std::vector<Vertex>& bob_moves) {
  GameState s(p);
  Rng rng(0);
  std::vector<Choice> out;
  auto alice_turn = [&] {
    const Choice c = alice.choose(s, rng);
    out.push_back(c);
    s.apply(Player::alice, c.vertex, c.rule);
  };
  alice_turn();
  for (Vertex b : bob_moves) {
    s.apply(Player::bob, b);
    if (!s.finished()) alice_turn();
  }
  return out;
}

TEST(RefinedStrategyTest, HandTrace) {
  const PowerView p = build_power(hand_trace_tree(), 1);
  auto alice = alice_refined();
  const auto replies = alice_replies(p, *alice, {4, 6, 8});
  ASSERT_EQ(replies.size(), 4u);
  EXPECT_EQ(replies[0].vertex, 0);
  EXPECT_EQ(replies[0].rule, Rule::first);
  EXPECT_EQ(replies[1].vertex, 1);
  EXPECT_EQ(replies[1].rule, Rule::b);
  EXPECT_EQ(replies[2].vertex, 3);
  EXPECT_EQ(replies[2].rule, Rule::a1);
  EXPECT_EQ(replies[3].vertex, 2);
  EXPECT_EQ(replies[3].rule, Rule::a2);
}

TEST(BasicStrategyTest, HandTrace) {
  const PowerView p = build_power(hand_trace_tree(), 1);
  auto alice = alice_basic();
  const auto replies = alice_replies(p, *alice, {4, 6, 8});
  ASSERT_EQ(replies.size(), 4u);
  EXPECT_EQ(replies[2].vertex, 3);
  EXPECT_EQ(replies[2].rule, Rule::a1);
  // Without Rule A2 the move falls through to Rule B, which happens to pick vertex 2 too.
  EXPECT_EQ(replies[3].vertex, 2);
  EXPECT_EQ(replies[3].rule, Rule::b);
}

TEST(BasicStrategyTest, SingleVertex) {
  const PowerView p = build_power(path_forest(1), 1);
  auto alice = alice_basic();
  GameState s(p);
  Rng rng(0);
  const Choice c = alice->choose(s, rng);
  EXPECT_EQ(c.vertex, 0);
  EXPECT_EQ(c.rule, Rule::first);
}

TEST(BasicStrategyTest, DiffersFromRefinedSomewhere) {
  // Search small trees and Bob lines for a position where Rule A2 changes Alice's move.
  bool found = false;
  for (int n = 4; n <= 9 && !found; ++n) {
    enumerate_trees(n, 3, [&](const Forest& f) {
      if (found) return;
      const PowerView p = build_power(f, 1);
      ActivationAlice refined(ActivationAlice::Variant::refined);
      ActivationAlice basic(ActivationAlice::Variant::basic);
      GameState s(p);
      Rng rng(0);
      std::function<void()> search = [&] {
        if (found || s.finished()) return;
        const Choice a = refined.choose(s, rng);
        const Choice b = basic.choose(s, rng);
        if (a.vertex != b.vertex) {
          EXPECT_EQ(a.rule, Rule::a2);
          EXPECT_EQ(b.rule, Rule::b);
          found = true;
          return;
        }
        s.mark(Player::alice, a.vertex, a.rule);
        for (Vertex v = 0; v < static_cast<Vertex>(n) && !found && !s.finished(); ++v) {
          if (s.marked(v)) continue;
          s.mark(Player::bob, v);
          search();
          s.undo();
        }
        s.undo();
      };
      search();
    });
  }
  EXPECT_TRUE(found);
}

TEST(RefinedStrategyTest, OutOfTurnIsAStateError) {
  const PowerView p = build_power(path_forest(3), 1);
  auto alice = alice_refined();
  GameState s(p);
  s.apply(Player::alice, 0);
  Rng rng(0);
  EXPECT_THROW(alice->choose(s, rng), StateError);
}

TEST(RefinedStrategyTest, OpeningOverride) {
  const PowerView p = build_power(path_forest(5), 1);
  auto alice = alice_refined(AliceOptions{2});
  GameState s(p);
  Rng rng(0);
  EXPECT_EQ(alice->choose(s, rng).vertex, 2);
  auto bad = alice_refined(AliceOptions{9});
  EXPECT_THROW(bad->choose(s, rng), StrategyFault);
}

TEST(RefinedStrategyTest, RuleBPrefersBobsComponent) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}, {3, 4}};
  const PowerView p = build_power(Forest::from_edges(5, edges), 1);
  auto alice = alice_refined();
  // Bob opens the second component at 4; Alice answers there, nearest to root 4.
  const auto replies = alice_replies(p, *alice, {4});
  EXPECT_EQ(replies[1].vertex, 3);
  EXPECT_EQ(replies[1].rule, Rule::b);
  // Bob finishes the first component; Alice moves to the lowest unfinished component.
  const auto more = alice_replies(p, *alice, {1});
  EXPECT_EQ(more[1].vertex, 2);
  EXPECT_EQ(more[1].rule, Rule::b);
}

TEST(RandomBobTest, ReproducibleAndForced) {
  const PowerView p = build_power(path_forest(5), 1);
  auto alice = alice_refined();
  auto bob = bob_random();
  std::set<std::vector<Vertex>> distinct;
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto a = play(p, *alice, *bob, seed).ordering;
    EXPECT_EQ(a, play(p, *alice, *bob, seed).ordering);
    distinct.insert(a);
  }
  EXPECT_GE(distinct.size(), 2u);

  GameState s(p);
  for (Vertex v : {0, 1, 2, 3}) s.apply(s.turn(), v);
  Rng rng(9);
  EXPECT_EQ(bob->choose(s, rng).vertex, 4);
  s.apply(s.turn(), 4);
  EXPECT_THROW(bob->choose(s, rng), StateError);
}

// max over unmarked u != v of marked power-neighbours of u after marking v, by brute force.
int greedy_objective(const GameState& s, Vertex v) {
  int best = -1;
  for (Vertex u = 0; u < static_cast<Vertex>(s.vertex_count()); ++u) {
    if (u == v || s.marked(u)) continue;
    int count = 0;
    for (Vertex w : s.power().neighbours(u)) count += (s.marked(w) || w == v) ? 1 : 0;
    best = std::max(best, count);
  }
  return best;
}

TEST(GreedyBobTest, Examples) {
  auto bob = bob_greedy();
  Rng rng(0);
  {
    const PowerView p = build_power(path_forest(3), 1);
    GameState s(p);
    s.apply(Player::alice, 0);
    EXPECT_EQ(bob->choose(s, rng).vertex, 2);
  }
  {
    const PowerView p = build_power(Forest::from_edges(4, {}), 1);
    GameState s(p);
    s.apply(Player::alice, 0);
    EXPECT_EQ(bob->choose(s, rng).vertex, 1);
  }
  {
    const PowerView p = build_power(path_forest(4), 1);
    GameState s(p);
    s.apply(Player::alice, 1);
    EXPECT_EQ(bob->choose(s, rng).vertex, 3);
  }
}

TEST(GreedyBobTest, MaximisesTheObjective) {
  auto bob = bob_greedy();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const PowerView p = build_power(generate(ForestKind::random_forest, 25, 4, seed), 1 + seed % 3);
    GameState s(p);
    Rng rng(seed);
    auto random = bob_random();
    while (s.unmarked_count() > 1) {
      const Choice c = bob->choose(s, rng);
      int best = -2;
      Vertex arg = -1;
      for (Vertex v = 0; v < 25; ++v) {
        if (s.marked(v)) continue;
        const int value = greedy_objective(s, v);
        if (value > best) {
          best = value;
          arg = v;
        }
      }
      ASSERT_EQ(c.vertex, arg);
      s.apply(s.turn(), random->choose(s, rng).vertex);
    }
  }
}

TEST(ExhaustiveBobTest, Examples) {
  auto alice = alice_refined();
  EXPECT_EQ(bob_exhaustive(build_power(path_forest(4), 1), *alice).worst_score, 3);
  EXPECT_EQ(bob_exhaustive(build_power(path_forest(1), 1), *alice).worst_score, 1);
}

TEST(ExhaustiveBobTest, RejectsRandomAliceAndHugeInstances) {
  RandomBob random_alice;
  EXPECT_THROW(bob_exhaustive(build_power(path_forest(4), 1), random_alice), InputError);
  auto alice = alice_refined();
  EXPECT_THROW(bob_exhaustive(build_power(path_forest(kMaxExhaustiveVertices + 1), 1), *alice), CapacityError);
}

TEST(ExhaustiveBobTest, SmallTreesRespectTheForestBound) {
  auto alice = alice_refined();
  for (int n = 1; n <= 7; ++n) {
    enumerate_trees(n, 3, [&](const Forest& f) {
      const auto r = bob_exhaustive(build_power(f, 1), *alice);
      EXPECT_LE(r.worst_score, 4);
    });
  }
}

TEST(ExhaustiveBobTest, MemoisedSearchMatchesPlainSearchAndWitnessReplays) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const Forest f = generate(seed % 2 ? ForestKind::random_forest : ForestKind::random_tree, n, 3 + seed % 2, seed);
    const PowerView p = build_power(f, 1 + seed % 3);
    std::unique_ptr<Strategy> alices[] = {alice_refined(), alice_basic()};
    for (auto& alice : alices) {
      ExhaustiveOptions plain;
      plain.memoize = false;
      const auto fast = bob_exhaustive(p, *alice);
      const auto slow = bob_exhaustive(p, *alice, plain);
      ASSERT_EQ(fast.worst_score, slow.worst_score) << "seed " << seed;
      ASSERT_EQ(fast.witness.size(), f.vertex_count());
      EXPECT_EQ(score(p, fast.witness).score, fast.worst_score);
      // The witness is a line Alice's strategy actually plays.
      GameState s(p);
      Rng rng(0);
      for (Vertex v : fast.witness) {
        if (s.turn() == Player::alice) {
          ASSERT_EQ(alice->choose(s, rng).vertex, v);
        }
        s.apply(s.turn(), v);
      }
    }
  }
}

TEST(ExhaustiveBobTest, DominatesHeuristicBobs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PowerView p = build_power(generate(ForestKind::random_tree, 4 + seed % 8, 3, seed), 1 + seed % 2);
    auto alice = alice_refined();
    const int worst = bob_exhaustive(p, *alice).worst_score;
    auto greedy = bob_greedy();
    EXPECT_LE(play(p, *alice, *greedy).score, worst);
    auto random = bob_random();
    for (std::uint64_t s = 0; s < 5; ++s) EXPECT_LE(play(p, *alice, *random, s).score, worst);
  }
}

TEST(ExhaustiveBobTest, BoundStopsEarlyWithWitness) {
  // The star K_{1,3} as a square is K_4, so any line scores 4.
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  const PowerView p = build_power(Forest::from_edges(4, star), 2);
  auto alice = alice_refined();
  ExhaustiveOptions o;
  o.bound = 3;
  const auto r = bob_exhaustive(p, *alice, o);
  EXPECT_TRUE(r.bound_exceeded);
  EXPECT_EQ(r.worst_score, 4);
  EXPECT_EQ(r.witness.size(), 4u);
}

TEST(MonitorTest, OneMarkedChildFiresOnTwoMarkedBranches) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {1, 3}};
  const PowerView p = build_power(Forest::from_edges(4, edges), 1);
  GameState s(p);
  s.apply(Player::alice, 0);
  s.apply(Player::bob, 2);
  EXPECT_FALSE(check_one_marked_child(s));
  s.apply(Player::alice, 3);
  const auto v = check_one_marked_child(s);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->vertex, 1);
  EXPECT_EQ(v->observed, 2);
}

TEST(MonitorTest, CeilingFires) {
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  const PowerView p = build_power(Forest::from_edges(4, star), 1);
  GameState s(p);
  for (Vertex v : {1, 2, 3}) s.apply(s.turn(), v);
  EXPECT_FALSE(check_neighbour_ceiling(s, 3));
  const auto v = check_neighbour_ceiling(s, 2);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->vertex, 0);
}

TEST(MonitorTest, RefinedStrategyKeepsInvariantsInRandomGames) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int delta = 3 + static_cast<int>(seed % 3);
    const int m = 1 + static_cast<int>(seed / 3 % 3);
    const PowerView p = build_power(generate(ForestKind::random_forest, 120, delta, seed), m);
    auto alice = alice_refined();
    auto bob = seed % 2 ? bob_greedy() : bob_random();
    InvariantMonitor monitor(neighbour_ceiling(delta, m));
    const auto r = play(p, *alice, *bob, seed, monitor.observer());
    for (const auto& v : monitor.violations()) ADD_FAILURE() << v.describe();
    EXPECT_LE(r.score, bound_thm2({delta, m}));
  }
}

}  // namespace
}  // namespace powcol
