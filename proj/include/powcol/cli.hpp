#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "powcol/bounds.hpp"
#include "powcol/generate.hpp"
#include "powcol/io.hpp"
#include "powcol/monitor.hpp"
#include "powcol/power.hpp"
#include "powcol/solver.hpp"
#include "powcol/strategies.hpp"
#include "powcol/trace.hpp"
#include "powcol/verifier.hpp"

namespace powcol::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kCapacity = 3 };

namespace detail {

// Writes to the named file, or to fallback when the name is empty.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw InputError("cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

inline std::unique_ptr<Strategy> make_alice(const std::string& name, const PowerView& p, AliceOptions o) {
  if (name == "refined") return alice_refined(o);
  if (name == "basic") return alice_basic(o);
  if (name == "greedy-alice") return std::make_unique<GreedyAlice>();
  if (name == "optimal") return std::make_unique<OptimalAlice>(p);
  throw InputError("unknown Alice strategy '" + name + "'");
}

struct GenArgs {
  std::string kind;
  int n = 0;
  int max_degree = 3;
  std::optional<std::uint64_t> seed;
  std::string output;
};

struct PowerArgs {
  std::string input;
  int m = 1;
  std::string output;
};

struct PlayArgs {
  std::string input;
  int m = 1;
  std::string alice = "refined";
  std::string bob = "greedy";
  std::optional<std::uint64_t> seed;
  std::string trace;
  std::optional<Vertex> opening;
};

struct ExactArgs {
  std::string input;
  int m = 1;
  std::optional<int> threshold;
};

struct VerifyArgs {
  std::string mode;
  int n_max = 9;
  std::uint64_t count = 100;
  int n = 50;
  std::optional<int> n_min;
  int delta = 3;
  int m = 1;
  std::string bob = "greedy";
  std::string kind = "random_tree";
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string output;
};

struct BoundArgs {
  int delta = 3;
  int m = 1;
  std::string theorem = "2";
};

inline int run_gen(const GenArgs& a, std::ostream& out) {
  const ForestKind kind = parse_forest_kind(a.kind);
  if (is_random(kind) && !a.seed) throw InputError("gen: --seed is required for kind " + a.kind);
  const Forest f = generate(kind, a.n, a.max_degree, a.seed.value_or(0));
  Output o(a.output, out);
  write_forest(*o, f);
  return kOk;
}

inline int run_power(const PowerArgs& a, std::ostream& out) {
  const Forest f = read_forest_file(a.input);
  const PowerView p = build_power(f, a.m);
  Output o(a.output, out);
  write_edge_list(*o, p.vertex_count(), p.edges());
  return kOk;
}

inline int run_play(const PlayArgs& a, bool verbose, std::ostream& out, std::ostream& err) {
  const Forest f = read_forest_file(a.input);
  const PowerView p = build_power(f, a.m);
  auto alice = make_alice(a.alice, p, AliceOptions{a.opening});
  if (a.opening && !f.contains(*a.opening)) throw InputError("--opening is not a vertex of the forest");
  if (a.bob != "random" && a.bob != "greedy" && a.bob != "exhaustive") {
    throw InputError("unknown Bob strategy '" + a.bob + "'");
  }
  if (a.bob == "random" && !a.seed) throw InputError("play: --seed is required with --bob random");

  const bool monitored = a.alice == "refined" && a.m >= 1;
  const int delta = std::max(f.max_degree(), 3);
  std::optional<std::int64_t> bound;
  if (a.m >= 1) bound = bound_thm2(BoundParams{delta, a.m});
  InvariantMonitor monitor(a.m >= 1 ? neighbour_ceiling(delta, a.m) : 0);

  std::vector<MoveRecord> records;
  MoveObserver observer = [&](const GameState& s, const MoveRecord& r) {
    records.push_back(r);
    if (monitored) monitor(s, r);
  };
  ScoreReport report;
  if (a.bob == "exhaustive") {
    ExhaustiveResult worst = bob_exhaustive(p, *alice, ExhaustiveOptions{});
    // Replay the witness line so the trace and monitors see an actual game.
    GameState s(p);
    Rng rng(a.seed.value_or(0));
    for (std::size_t i = 0; i < worst.witness.size(); ++i) {
      const Player who = s.turn();
      std::optional<Rule> rule;
      if (who == Player::alice) rule = alice->choose(s, rng).rule;
      observer(s, s.apply(who, worst.witness[i], rule));
    }
    report = score(p, s.order());
  } else {
    auto bob = a.bob == "random" ? bob_random() : bob_greedy();
    report = play(p, *alice, *bob, a.seed.value_or(0), observer);
  }
  if (!a.trace.empty()) {
    Output t(a.trace, out);
    for (const MoveRecord& r : records) *t << to_trace_line(r) << '\n';
  }
  const bool within = !bound || report.score <= *bound;
  const bool clean = monitor.violations().empty();
  out << "score,bound_thm2,within_bound,monitor_violations\n";
  out << report.score << ',';
  if (bound) out << *bound;
  out << ',' << (within ? "true" : "false") << ',' << monitor.violations().size() << '\n';
  if (verbose) {
    err << "ordering:";
    for (Vertex v : report.ordering) err << ' ' << v;
    err << '\n';
    for (const auto& v : monitor.violations()) err << "violation: " << v.describe() << '\n';
  }
  return within && clean ? kOk : kFailure;
}

inline int run_exact(const ExactArgs& a, bool verbose, std::ostream& out, std::ostream& err) {
  const Forest f = read_forest_file(a.input);
  const PowerView p = build_power(f, a.m);
  if (a.threshold) {
    out << (alice_wins(p, *a.threshold) ? "true" : "false") << '\n';
    return kOk;
  }
  const SolverResult r = exact_colg(p);
  out << r.value << '\n';
  if (verbose) {
    err << "principal variation:";
    for (Vertex v : r.principal_variation) err << ' ' << v;
    err << "\nnodes expanded: " << r.nodes_expanded << '\n';
  }
  return kOk;
}

inline int run_verify(const VerifyArgs& a, bool verbose, std::ostream& out, std::ostream& err) {
  Output o(a.output, out);
  *o << kReportHeader << '\n';
  auto sink = [&](const CampaignReport& r) {
    *o << to_csv_row(r) << '\n';
    if (!r.pass && verbose) {
      err << "failed instance [" << r.instance << "] witness:";
      for (Vertex v : r.witness) err << ' ' << v;
      err << '\n';
      for (const auto& v : r.violations) err << "  " << v.describe() << '\n';
    }
  };
  CampaignSummary summary;
  if (a.mode == "exhaustive") {
    summary = verify_exhaustive(ExhaustiveCampaign{a.n_max, a.delta, a.m, a.jobs}, sink);
  } else if (a.mode == "random") {
    if (!a.seed) throw InputError("verify: --seed is required with --mode random");
    RandomCampaign c;
    c.count = a.count;
    c.n = a.n;
    c.n_min = a.n_min;
    c.delta = a.delta;
    c.m = a.m;
    c.bob = a.bob;
    c.kind = parse_forest_kind(a.kind);
    c.seed = *a.seed;
    c.jobs = a.jobs;
    summary = verify_random(c, sink);
  } else {
    throw InputError("verify: --mode must be exhaustive or random");
  }
  if (verbose) {
    err << "instances: " << summary.instances << ", failures: " << summary.failures
        << ", monitor violations: " << summary.violations << ", worst score: " << summary.worst_score << '\n';
  }
  return summary.failures == 0 ? kOk : kFailure;
}

inline int run_bound(const BoundArgs& a, std::ostream& out) {
  const BoundParams b{a.delta, a.m};
  std::int64_t value = 0;
  if (a.theorem == "1") value = bound_thm1(b);
  else if (a.theorem == "2") value = bound_thm2(b);
  else if (a.theorem == "mm") value = bound_mm(b);
  else if (a.theorem == "ancestor") value = ancestor_bound(b);
  else if (a.theorem == "child") value = child_bound(b.m);
  else throw InputError("bound: --theorem must be one of 1, 2, mm, ancestor, child");
  out << value << '\n';
  return kOk;
}

}  // namespace detail

// Entry point of the powcol command line tool. Returns the process exit code:
// 0 success, 1 verification failure or monitor violation, 2 usage or input error,
// 3 instance beyond a capacity cap.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Marking game on powers of forests", "powcol"};
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Human-readable extras on stderr");

  detail::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a forest");
  gen_cmd->add_option("--kind", gen.kind, "path | complete_dary | random_tree | random_forest")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--max-degree", gen.max_degree, "Degree cap");
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed (required for random kinds)");
  gen_cmd->add_option("-o", gen.output, "Output file (default stdout)");

  detail::PowerArgs pow;
  auto* power_cmd = app.add_subcommand("power", "Write the m-th power as an edge list");
  power_cmd->add_option("-i", pow.input, "Forest file")->required();
  power_cmd->add_option("-m", pow.m, "Power")->required()->check(CLI::NonNegativeNumber);
  power_cmd->add_option("-o", pow.output, "Output file (default stdout)");

  detail::PlayArgs playa;
  auto* play_cmd = app.add_subcommand("play", "Play one game and score it");
  play_cmd->add_option("-i", playa.input, "Forest file")->required();
  play_cmd->add_option("-m", playa.m, "Power")->required()->check(CLI::NonNegativeNumber);
  play_cmd->add_option("--alice", playa.alice, "refined | basic | greedy-alice | optimal")->required();
  play_cmd->add_option("--bob", playa.bob, "random | greedy | exhaustive")->required();
  play_cmd->add_option("--seed", playa.seed, "64-bit seed (required with --bob random)");
  play_cmd->add_option("--trace", playa.trace, "Write the JSONL move trace here");
  play_cmd->add_option("--opening", playa.opening, "Alice's opening vertex");

  detail::ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact game colouring number by search");
  exact_cmd->add_option("-i", exact.input, "Forest file")->required();
  exact_cmd->add_option("-m", exact.m, "Power")->required()->check(CLI::NonNegativeNumber);
  exact_cmd->add_option("--threshold", exact.threshold, "Only decide whether Alice keeps the score <= S");

  detail::VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign, CSV report");
  verify_cmd->add_option("--mode", ver.mode, "exhaustive | random")->required();
  verify_cmd->add_option("--n-max", ver.n_max, "Largest tree (exhaustive)");
  verify_cmd->add_option("--count", ver.count, "Games (random)");
  verify_cmd->add_option("--n", ver.n, "Vertices per forest, or the upper end with --n-min (random)");
  verify_cmd->add_option("--n-min", ver.n_min, "Lower end of the size range (random)");
  verify_cmd->add_option("--delta", ver.delta, "Degree cap");
  verify_cmd->add_option("-m", ver.m, "Power")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--bob", ver.bob, "random | greedy | exhaustive (random)");
  verify_cmd->add_option("--kind", ver.kind, "random_tree | random_forest (random)");
  verify_cmd->add_option("--seed", ver.seed, "64-bit seed (required with --mode random)");
  verify_cmd->add_option("--jobs", ver.jobs, "Worker threads");
  verify_cmd->add_option("-o", ver.output, "CSV output file (default stdout)");

  detail::BoundArgs bnd;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a bound formula");
  bound_cmd->add_option("--delta", bnd.delta, "Maximum degree")->required();
  bound_cmd->add_option("-m", bnd.m, "Power")->required();
  bound_cmd->add_option("--theorem", bnd.theorem, "1 | 2 | mm | ancestor | child");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*gen_cmd) return detail::run_gen(gen, out);
    if (*power_cmd) return detail::run_power(pow, out);
    if (*play_cmd) return detail::run_play(playa, verbose, out, err);
    if (*exact_cmd) return detail::run_exact(exact, verbose, out, err);
    if (*verify_cmd) return detail::run_verify(ver, verbose, out, err);
    if (*bound_cmd) return detail::run_bound(bnd, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace powcol::cli
