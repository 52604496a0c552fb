#include "gtest/gtest.h"
#include "oracles.hpp"
#include "powcol/enumerate.hpp"
#include "powcol/generate.hpp"
#include "powcol/solver.hpp"
#include "powcol/strategies.hpp"

namespace powcol {
namespace {

using testing::path_forest;

TEST(SolverTest, ThresholdExamples) {
  EXPECT_TRUE(alice_wins(build_power(path_forest(1), 1), 1));
  EXPECT_FALSE(alice_wins(build_power(path_forest(2), 1), 1));
  EXPECT_TRUE(alice_wins(build_power(path_forest(2), 1), 2));
  EXPECT_FALSE(alice_wins(build_power(path_forest(4), 1), 2));
  EXPECT_TRUE(alice_wins(build_power(path_forest(4), 1), 3));
  EXPECT_FALSE(alice_wins(build_power(path_forest(3), 1), 0));
}

TEST(SolverTest, PathOfFour) {
  const PowerView p = build_power(path_forest(4), 1);
  const SolverResult r = exact_colg(p);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.value, testing::naive_game_value(testing::power_matrix(path_forest(4), 1)));
}

TEST(SolverTest, AgreesWithNaiveMinimaxOnSmallForests) {
  for (int n = 1; n <= 5; ++n) {
    for (const Forest& f : testing::all_forests(n)) {
      for (int m : {1, 2}) {
        const PowerView p = build_power(f, m);
        ASSERT_EQ(exact_colg(p).value, testing::naive_game_value(testing::power_matrix(f, m)))
            << "n=" << n << " m=" << m;
      }
    }
  }
}

TEST(SolverTest, ValueProperties) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 12);
    const Forest f = generate(ForestKind::random_forest, n, 3 + seed % 3, seed);
    const PowerView p = build_power(f, 1 + seed % 3);
    const SolverResult r = exact_colg(p);
    EXPECT_LE(r.value, 1 + p.max_degree());
    EXPECT_GE(r.value, 1);
    for (int s = 1; s <= p.max_degree() + 2; ++s) EXPECT_EQ(alice_wins(p, s), s >= r.value) << "s=" << s;
    ASSERT_EQ(r.principal_variation.size(), f.vertex_count());
    EXPECT_EQ(score(p, r.principal_variation).score, r.value);
  }
}

TEST(SolverTest, TreesOfMaxDegreeThreeStayWithinFour) {
  for (int n = 1; n <= 8; ++n) {
    enumerate_trees(n, 3, [&](const Forest& f) { EXPECT_LE(exact_colg(build_power(f, 1)).value, 4); });
  }
}

TEST(SolverTest, OptimalAliceHoldsTheValue) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PowerView p = build_power(generate(ForestKind::random_tree, 4 + seed % 9, 3, seed), 1 + seed % 2);
    OptimalAlice alice(p);
    const int value = exact_colg(p).value;
    EXPECT_EQ(alice.target(), value);
    auto greedy = bob_greedy();
    EXPECT_LE(play(p, alice, *greedy).score, value);
    auto random = bob_random();
    for (std::uint64_t s = 0; s < 5; ++s) EXPECT_LE(play(p, alice, *random, s).score, value);
    if (p.vertex_count() <= kMaxExhaustiveVertices) EXPECT_EQ(bob_exhaustive(p, alice).worst_score, value);
  }
}

TEST(SolverTest, CapacityCap) {
  EXPECT_THROW(exact_colg(build_power(path_forest(kMaxSolverVertices + 1), 1)), CapacityError);
}

}  // namespace
}  // namespace powcol
