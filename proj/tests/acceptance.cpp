// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "powcol/powcol.hpp"

namespace {

using namespace powcol;

struct Outcome {
  bool pass = true;
  std::string detail;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome exhaustive_campaign(int m, int limit) {
  const CampaignSummary s = verify_exhaustive({9, 3, m, worker_count()});
  Outcome o;
  o.pass = s.failures == 0 && s.violations == 0 && s.worst_score <= limit;
  o.detail = std::to_string(s.instances) + " trees, worst score " + std::to_string(s.worst_score) + " (limit " +
             std::to_string(limit) + "), " + std::to_string(s.violations) + " monitor violations";
  return o;
}

Outcome forest_bound_m1() {
  Outcome o = exhaustive_campaign(1, 4);
  RandomCampaign c;
  c.count = 500;
  c.n = 9;
  c.n_min = 1;
  c.delta = 5;
  c.m = 1;
  c.bob = "exhaustive";
  c.seed = 20240601;
  c.jobs = worker_count();
  const CampaignSummary s = verify_random(c);
  o.pass = o.pass && s.failures == 0 && s.violations == 0 && s.worst_score <= 4;
  o.detail += "; random sample: " + std::to_string(s.instances) + " trees, worst score " +
              std::to_string(s.worst_score) + ", " + std::to_string(s.violations) + " monitor violations";
  return o;
}

Outcome invariant_suite() {
  constexpr std::uint64_t kGames = 10000;
  constexpr std::uint64_t kBase = 77;
  std::uint64_t violations = 0, over_bound = 0;
  for (std::uint64_t i = 0; i < kGames; ++i) {
    const std::uint64_t seed = derive_seed(kBase, i);
    Rng rng(seed);
    const int n = 1 + static_cast<int>(uniform_below(rng, 200));
    const int delta = 3 + static_cast<int>(i % 3);
    const int m = 1 + static_cast<int>(i / 3 % 3);
    const ForestKind kind = i / 18 % 2 ? ForestKind::random_forest : ForestKind::random_tree;
    const PowerView p = build_power(generate(kind, n, delta, seed), m);
    auto alice = alice_refined();
    auto bob = i / 9 % 2 ? bob_greedy() : bob_random();
    InvariantMonitor monitor(neighbour_ceiling(delta, m));
    const ScoreReport r = play(p, *alice, *bob, seed, monitor.observer());
    violations += monitor.violations().size();
    over_bound += r.score > bound_thm2({delta, m}) ? 1 : 0;
  }
  return {violations == 0 && over_bound == 0, std::to_string(kGames) + " games, " + std::to_string(violations) +
                                                  " monitor violations, " + std::to_string(over_bound) +
                                                  " scores above the bound"};
}

Outcome solver_oracle() {
  std::uint64_t checked = 0, mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Forest& f : testing::all_forests(n)) {
      for (int m : {1, 2}) {
        ++checked;
        if (exact_colg(build_power(f, m)).value != testing::naive_game_value(testing::power_matrix(f, m))) {
          ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " (forest, m) pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome sandwich() {
  std::uint64_t checked = 0, broken = 0;
  for (int m : {1, 2}) {
    const std::int64_t bound = bound_thm2({3, m});
    for (int n = 1; n <= 8; ++n) {
      enumerate_trees(n, 3, [&](const Forest& f) {
        const PowerView p = build_power(f, m);
        auto alice = alice_refined();
        const int exact = exact_colg(p).value;
        const ExhaustiveResult worst = bob_exhaustive(p, *alice);
        ++checked;
        if (!(exact <= worst.worst_score && worst.worst_score <= bound)) ++broken;
      });
    }
  }
  return {broken == 0, std::to_string(checked) + " (tree, m) pairs, " + std::to_string(broken) + " violations"};
}

Outcome bound_algebra() {
  int broken = 0, checked = 0;
  for (int d = 3; d <= 12; ++d) {
    for (int m = 1; m <= 8; ++m) {
      const BoundParams b{d, m};
      ++checked;
      if (bound_thm2(b) > bound_thm1(b)) ++broken;
      if (bound_thm2(b) - bound_mm(b) != 2) ++broken;
      if (ancestor_bound(b) + child_bound(m) != bound_mm(b)) ++broken;
    }
  }
  return {broken == 0, std::to_string(checked) + " parameter pairs, " + std::to_string(broken) + " failed identities"};
}

Outcome power_oracle() {
  int mismatches = 0, checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(derive_seed(4242, seed));
    const int n = 1 + static_cast<int>(uniform_below(rng, 64));
    const int delta = 2 + static_cast<int>(uniform_below(rng, 5));
    const Forest f = generate(seed % 2 ? ForestKind::random_forest : ForestKind::random_tree, n, delta, seed);
    for (int m = 0; m <= 6; ++m) {
      ++checked;
      const PowerView p = build_power(f, m);
      const auto expected = testing::power_matrix(f, m);
      bool same = true;
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) same = same && p.adjacent(u, v) == expected[u][v];
      }
      mismatches += same ? 0 : 1;
    }
  }
  return {mismatches == 0, std::to_string(checked) + " (forest, m) pairs, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"m1-forest-bound", forest_bound_m1},
      {"delta3-m2-bound", [] { return exhaustive_campaign(2, 8); }},
      {"invariant-monitors", invariant_suite},
      {"exact-solver-oracle", solver_oracle},
      {"sandwich", sandwich},
      {"bound-algebra", bound_algebra},
      {"power-oracle", power_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
