#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "powcol/bounds.hpp"
#include "powcol/enumerate.hpp"
#include "powcol/generate.hpp"
#include "powcol/monitor.hpp"
#include "powcol/strategies.hpp"

namespace powcol {

struct CampaignReport {
  std::string kind;
  int n = 0;
  int delta_cap = 0;
  int delta_actual = 0;
  int m = 1;
  std::string alice = "refined";
  std::string bob;
  std::optional<std::uint64_t> seed;  // generation and play seed for random instances
  int score = 0;
  std::int64_t bound_thm1 = 0;
  std::int64_t bound_thm2 = 0;
  std::vector<MonitorViolation> violations;
  bool pass = true;
  std::string instance;         // edge list "u-v u-v ..."
  std::vector<Vertex> witness;  // marking order of the offending (or worst) game
};

struct CampaignSummary {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t violations = 0;
  int worst_score = 0;

  void add(const CampaignReport& r) {
    ++instances;
    failures += r.pass ? 0 : 1;
    violations += r.violations.size();
    worst_score = std::max(worst_score, r.score);
  }
};

using ReportSink = std::function<void(const CampaignReport&)>;

inline constexpr const char* kReportHeader =
    "kind,n,delta_cap,delta_actual,m,alice,bob,seed,score,bound_thm1,bound_thm2,monitor_violations,verdict";

inline std::string to_csv_row(const CampaignReport& r) {
  std::ostringstream out;
  out << r.kind << ',' << r.n << ',' << r.delta_cap << ',' << r.delta_actual << ',' << r.m << ',' << r.alice << ','
      << r.bob << ',';
  if (r.seed) out << *r.seed;
  out << ',' << r.score << ',' << r.bound_thm1 << ',' << r.bound_thm2 << ',' << r.violations.size() << ','
      << (r.pass ? "pass" : "fail");
  return out.str();
}

inline std::string describe_edges(const Forest& f) {
  std::string out;
  for (const Edge& e : f.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

namespace detail {

// Bounds are evaluated at the generator's degree cap, raised to 3 where the closed forms
// need it; both are monotone in delta.
inline BoundParams campaign_bounds(int delta_cap, int m) { return BoundParams{std::max(delta_cap, 3), m}; }

inline CampaignReport exhaustive_report(const Forest& f, int delta_cap, int m) {
  const BoundParams b = campaign_bounds(delta_cap, m);
  CampaignReport r;
  r.kind = "labelled_tree";
  r.n = static_cast<int>(f.vertex_count());
  r.delta_cap = delta_cap;
  r.delta_actual = f.max_degree();
  r.m = m;
  r.bob = "exhaustive";
  r.bound_thm1 = bound_thm1(b);
  r.bound_thm2 = bound_thm2(b);
  const PowerView p = build_power(f, m);
  ActivationAlice alice(ActivationAlice::Variant::refined);
  ExhaustiveOptions options;
  options.bound = static_cast<int>(r.bound_thm2);
  options.monitor_ceiling = static_cast<int>(bound_mm(b));
  ExhaustiveResult result = bob_exhaustive(p, alice, options);
  r.score = result.worst_score;
  r.violations = std::move(result.violations);
  r.pass = !result.bound_exceeded && r.score <= r.bound_thm2 && r.violations.empty();
  r.instance = describe_edges(f);
  if (!r.pass) r.witness = std::move(result.witness);
  return r;
}

// Runs tasks on up to jobs threads and hands their reports to sink in task order.
inline void run_ordered(std::size_t tasks, unsigned jobs,
                        const std::function<std::vector<CampaignReport>(std::size_t)>& produce,
                        const ReportSink& sink) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::size_t t = 0; t < tasks; ++t) {
      for (const CampaignReport& r : produce(t)) sink(r);
    }
    return;
  }
  const std::size_t wave = static_cast<std::size_t>(jobs) * 4;
  for (std::size_t begin = 0; begin < tasks; begin += wave) {
    const std::size_t end = std::min(tasks, begin + wave);
    std::vector<std::vector<CampaignReport>> results(end - begin);
    std::vector<std::exception_ptr> errors(end - begin);
    std::atomic<std::size_t> next{begin};
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (std::size_t t = next++; t < end; t = next++) {
          try {
            results[t - begin] = produce(t);
          } catch (...) {
            errors[t - begin] = std::current_exception();
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    for (std::size_t t = begin; t < end; ++t) {
      if (errors[t - begin]) std::rethrow_exception(errors[t - begin]);
      for (const CampaignReport& r : results[t - begin]) sink(r);
    }
  }
}

}  // namespace detail

struct ExhaustiveCampaign {
  int n_max = 9;
  int delta = 3;
  int m = 1;
  unsigned jobs = 1;
};

// Every labelled tree with 1 <= n <= n_max vertices and maximum degree <= delta, played by the
// refined strategy against the exhaustive Bob with both runtime monitors attached. Reports
// arrive in enumeration order.
inline CampaignSummary verify_exhaustive(const ExhaustiveCampaign& c, const ReportSink& sink = {}) {
  if (c.n_max < 1) throw InputError("verify_exhaustive: n_max must be at least 1");
  if (c.m < 1) throw InputError("verify_exhaustive: m must be at least 1");
  if (c.delta < 1) throw InputError("verify_exhaustive: delta must be at least 1");
  if (c.n_max > kMaxEnumeratedVertices) {
    throw CapacityError("verify_exhaustive: n_max = " + std::to_string(c.n_max) + " exceeds the cap of " +
                        std::to_string(kMaxEnumeratedVertices));
  }
  // Shards: (n, Pruefer prefix of length up to two).
  struct Shard {
    int n;
    std::vector<int> prefix;
  };
  std::vector<Shard> shards;
  for (int n = 1; n <= c.n_max; ++n) {
    const int depth = std::clamp(n - 2, 0, 2);
    if (depth == 0) shards.push_back({n, {}});
    if (depth == 1) {
      for (int a = 0; a < n; ++a) shards.push_back({n, {a}});
    }
    if (depth == 2) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) shards.push_back({n, {a, b}});
      }
    }
  }
  CampaignSummary summary;
  detail::run_ordered(
      shards.size(), c.jobs,
      [&](std::size_t t) {
        std::vector<CampaignReport> out;
        enumerate_trees(
            shards[t].n, c.delta, [&](const Forest& f) { out.push_back(detail::exhaustive_report(f, c.delta, c.m)); },
            shards[t].prefix);
        return out;
      },
      [&](const CampaignReport& r) {
        summary.add(r);
        if (sink) sink(r);
      });
  return summary;
}

struct RandomCampaign {
  std::uint64_t count = 1;
  int n = 50;
  std::optional<int> n_min;  // when set, each game draws its size from [n_min, n]
  int delta = 3;
  int m = 1;
  std::string bob = "greedy";  // random | greedy | exhaustive
  ForestKind kind = ForestKind::random_tree;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

// Seeded random forests played by the refined strategy against a heuristic or exhaustive Bob,
// with the runtime monitors attached. Each report's seed regenerates its forest with
// generate(kind, n, delta, seed) and replays Bob's random choices with the same seed.
inline CampaignSummary verify_random(const RandomCampaign& c, const ReportSink& sink = {}) {
  if (c.n < 1 || (c.n_min && (*c.n_min < 1 || *c.n_min > c.n))) throw InputError("verify_random: invalid n range");
  if (c.m < 1) throw InputError("verify_random: m must be at least 1");
  if (c.bob != "random" && c.bob != "greedy" && c.bob != "exhaustive") {
    throw InputError("verify_random: unknown Bob strategy '" + c.bob + "'");
  }
  if (c.bob == "exhaustive" && static_cast<std::size_t>(c.n) > kMaxExhaustiveVertices) {
    throw CapacityError("verify_random: exhaustive Bob needs n <= " + std::to_string(kMaxExhaustiveVertices));
  }
  // Validate generator parameters once, before any work.
  generate(c.kind, c.n_min.value_or(c.n), c.delta, 0);

  struct Game {
    int n;
    std::uint64_t seed;
  };
  std::vector<Game> games;
  games.reserve(c.count);
  Rng sizer(c.seed);
  for (std::uint64_t i = 0; i < c.count; ++i) {
    const std::uint64_t seed = sizer();
    const int lo = c.n_min.value_or(c.n);
    const int n = lo + static_cast<int>(uniform_below(sizer, static_cast<std::uint64_t>(c.n - lo + 1)));
    games.push_back({n, seed});
  }

  const BoundParams b = detail::campaign_bounds(c.delta, c.m);
  const int ceiling = static_cast<int>(bound_mm(b));
  constexpr std::size_t kGamesPerTask = 16;
  const std::size_t tasks = (games.size() + kGamesPerTask - 1) / kGamesPerTask;

  auto one = [&](const Game& g) {
    const Forest f = generate(c.kind, g.n, c.delta, g.seed);
    const PowerView p = build_power(f, c.m);
    CampaignReport r;
    r.kind = std::string(to_string(c.kind));
    r.n = g.n;
    r.delta_cap = c.delta;
    r.delta_actual = f.max_degree();
    r.m = c.m;
    r.bob = c.bob;
    r.seed = g.seed;
    r.bound_thm1 = bound_thm1(b);
    r.bound_thm2 = bound_thm2(b);
    ActivationAlice alice(ActivationAlice::Variant::refined);
    if (c.bob == "exhaustive") {
      ExhaustiveOptions options;
      options.bound = static_cast<int>(r.bound_thm2);
      options.monitor_ceiling = ceiling;
      ExhaustiveResult result = bob_exhaustive(p, alice, options);
      r.score = result.worst_score;
      r.violations = std::move(result.violations);
      r.witness = std::move(result.witness);
      r.pass = !result.bound_exceeded;
    } else {
      std::unique_ptr<Strategy> bob = c.bob == "random" ? bob_random() : bob_greedy();
      InvariantMonitor monitor(ceiling);
      const ScoreReport score = play(p, alice, *bob, g.seed, monitor.observer());
      r.score = score.score;
      r.violations = monitor.violations();
      r.witness = score.ordering;
    }
    r.pass = r.pass && r.score <= r.bound_thm2 && r.violations.empty();
    r.instance = describe_edges(f);
    if (r.pass) r.witness.clear();
    return r;
  };

  CampaignSummary summary;
  detail::run_ordered(
      tasks, c.jobs,
      [&](std::size_t t) {
        std::vector<CampaignReport> out;
        const std::size_t end = std::min(games.size(), (t + 1) * kGamesPerTask);
        for (std::size_t i = t * kGamesPerTask; i < end; ++i) out.push_back(one(games[i]));
        return out;
      },
      [&](const CampaignReport& r) {
        summary.add(r);
        if (sink) sink(r);
      });
  return summary;
}

}  // namespace powcol
