#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phasepotts/batch.hpp"
#include "phasepotts/errors.hpp"
#include "phasepotts/graph.hpp"
#include "phasepotts/metrics.hpp"
#include "phasepotts/oracle.hpp"
#include "phasepotts/serialization.hpp"
#include "run_config.hpp"

namespace fs = std::filesystem;

namespace phasepotts::cli {

namespace {

// Flags shared by solve and bench; each overrides the config file when given.
struct RunFlags {
  std::string config_path;
  std::optional<double> coupling, shil, sigma, dt;
  std::optional<double> t_init, t_anneal1, t_lock1, t_relax, t_anneal2, t_lock2, sigma_relax;
  std::optional<std::size_t> iterations, threads;
  std::optional<std::uint64_t> seed;
  std::optional<int> colors;
  std::optional<double> lock_tolerance;
  bool timing = false;
};

void add_run_flags(CLI::App* app, RunFlags& f) {
  app->add_option("--config", f.config_path,
                  std::string("key = value config file (default: $") + kConfigEnvVar + ")");
  app->add_option("--iters", f.iterations, "independent runs (default 40)");
  app->add_option("--seed", f.seed, "master seed (default 1)");
  app->add_option("--colors", f.colors, "number of colors: 2, 4, 8 or 16 (default 4)");
  app->add_option("--threads", f.threads, "worker threads (0 = all cores)");
  app->add_option("--coupling", f.coupling, "coupling strength K_c");
  app->add_option("--shil", f.shil, "SHIL strength K_s");
  app->add_option("--sigma", f.sigma, "phase noise during anneal and lock stages");
  app->add_option("--dt", f.dt, "integration step");
  app->add_option("--t-init", f.t_init, "free drift before the first anneal");
  app->add_option("--t-anneal1", f.t_anneal1, "stage-1 anneal, all couplings on");
  app->add_option("--t-lock1", f.t_lock1, "stage-1 SHIL lock");
  app->add_option("--t-relax", f.t_relax, "re-randomization between stages");
  app->add_option("--t-anneal2", f.t_anneal2, "later-stage anneal, intra-group couplings only");
  app->add_option("--t-lock2", f.t_lock2, "later-stage SHIL lock");
  app->add_option("--sigma-relax", f.sigma_relax, "phase noise while re-randomizing");
  app->add_option("--lock-tol", f.lock_tolerance, "lock detection tolerance (rad)");
  app->add_flag("--timing", f.timing, "record wall-clock times in output files");
}

RunConfig resolve(const RunFlags& f) {
  RunConfig c;
  std::string path = f.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar); env && *env) path = env;
  }
  if (!path.empty()) apply_config_file(c, path);
  auto set = [](auto& dst, const auto& src) {
    if (src) dst = *src;
  };
  set(c.dynamics.coupling, f.coupling);
  set(c.dynamics.shil, f.shil);
  set(c.dynamics.sigma, f.sigma);
  set(c.dynamics.dt, f.dt);
  set(c.plan.t_init, f.t_init);
  set(c.plan.t_anneal1, f.t_anneal1);
  set(c.plan.t_lock1, f.t_lock1);
  set(c.plan.t_relax, f.t_relax);
  set(c.plan.t_anneal2, f.t_anneal2);
  set(c.plan.t_lock2, f.t_lock2);
  set(c.plan.sigma_relax, f.sigma_relax);
  set(c.iterations, f.iterations);
  set(c.threads, f.threads);
  set(c.master_seed, f.seed);
  set(c.colors, f.colors);
  set(c.lock_tolerance, f.lock_tolerance);
  c.validate();
  return c;
}

BatchConfig batch_config(const RunConfig& c) {
  BatchConfig b;
  b.params = c.dynamics;
  b.plan = c.plan;
  b.stages = c.stages();
  b.iterations = c.iterations;
  b.master_seed = c.master_seed;
  b.lock_tolerance = c.lock_tolerance;
  b.threads = c.threads;
  return b;
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string result_name(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "result_%03zu.json", k);
  return buf;
}

void print_summary(std::ostream& out, const RunStats& stats, std::size_t unlocked) {
  out << "iterations:        " << stats.per_iteration.size() << '\n'
      << "best accuracy:     " << fixed(stats.best_accuracy) << '\n'
      << "mean accuracy:     " << fixed(stats.mean_accuracy) << '\n'
      << "stage-1 cut:       best " << fixed(stats.best_cut_accuracy) << ", mean "
      << fixed(stats.mean_cut_accuracy) << " (baseline " << stats.cut_baseline.value << ", "
      << to_string(stats.cut_baseline.kind) << ")\n"
      << "stage correlation: pearson " << fixed(stats.stage_correlation, 3)
      << (stats.correlation_degenerate ? " (degenerate)" : "") << ", spearman "
      << fixed(stats.spearman_correlation, 3) << '\n'
      << "distinct colorings: " << stats.distinct_solutions() << '\n';
  if (unlocked) out << "warning: " << unlocked << " run(s) ended with unlocked phases\n";
}

void write_stats(const fs::path& dir, const RunStats& stats) {
  write_text_file(dir / "stats.json", run_stats_to_json(stats));
  write_text_file(dir / "stats.csv", run_stats_to_csv(stats));
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::size_t side = 0;
  std::string out_path;
  std::string format;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const auto graph = kings_graph(a.side);
  const auto format = a.format.empty() ? format_from_extension(a.out_path)
                                       : parse_graph_format(a.format);
  save_graph(graph, a.out_path, format);
  out << "wrote " << a.out_path << ": " << graph.node_count() << " nodes, "
      << graph.edge_count() << " edges\n";
  return 0;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string graph_path;
  std::string out_dir;
  std::string trajectory_path;
  std::size_t trajectory_stride = 10;
  RunFlags flags;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const auto graph = load_graph(a.graph_path);
  RunConfig config = resolve(a.flags);
  if (!a.out_dir.empty()) config.output = a.out_dir;

  const auto start = std::chrono::steady_clock::now();
  const auto batch = batch_config(config);
  const auto results = run_batch(graph, batch);
  const auto stats = aggregate(results, graph);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto unlocked = static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const SolveResult& r) { return r.unlocked_warning(); }));

  out << "graph: " << a.graph_path << " (" << graph.node_count() << " nodes, "
      << graph.edge_count() << " edges), " << config.colors << " colors\n";
  print_summary(out, stats, unlocked);
  out << "wall time:         " << fixed(elapsed, 2) << " s\n";

  if (!config.output.empty()) {
    const fs::path dir = config.output;
    fs::create_directories(dir);
    for (std::size_t k = 0; k < results.size(); ++k) {
      write_text_file(dir / result_name(k), solve_result_to_json(results[k], a.flags.timing));
    }
    write_stats(dir, stats);
    out << "results written to " << dir.string() << '\n';
  }

  if (!a.trajectory_path.empty()) {
    // Re-run iteration 0 with a recorder attached; the run is deterministic.
    std::ofstream traj(a.trajectory_path, std::ios::binary | std::ios::trunc);
    if (!traj) throw IoError("cannot write " + a.trajectory_path);
    CsvTrajectoryWriter writer(traj, graph.node_count(), a.trajectory_stride);
    SolveOptions options;
    options.lock_tolerance = config.lock_tolerance;
    options.baseline = results.front().cut_baseline;
    options.recorder = &writer;
    const auto seed = iteration_seed(config.master_seed, 0);
    if (batch.stages == 2) {
      solve_4coloring(graph, config.dynamics, config.plan, seed, options);
    } else {
      solve_kcoloring(graph, batch.stages, config.dynamics, config.plan, seed, options);
    }
    out << "trajectory of iteration 0 written to " << a.trajectory_path << '\n';
  }
  return 0;
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
  std::string graph_path;
  int colors = 4;
  long long timeout_ms = 10'000;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const auto graph = load_graph(a.graph_path);
  ColoringSearchLimits limits;
  limits.time_budget = std::chrono::milliseconds(a.timeout_ms);
  const auto coloring = exact_coloring(graph, a.colors, limits);
  if (!coloring) {
    out << "not colorable with " << a.colors << " colors\n";
    return 0;
  }
  out << "colorable with " << a.colors << " colors\n";
  out << "witness:";
  for (int c : *coloring) out << ' ' << c;
  out << '\n';
  return 0;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::vector<std::size_t> sides;
  std::string out_path;
  RunFlags flags;
};

int cmd_bench(BenchArgs a, std::ostream& out) {
  const RunConfig config = resolve(a.flags);
  std::sort(a.sides.begin(), a.sides.end());
  a.sides.erase(std::unique(a.sides.begin(), a.sides.end()), a.sides.end());

  std::ostringstream csv;
  csv << "size,search_space,search_space_bits,iterations,best_accuracy,mean_accuracy,"
         "best_cut_accuracy,mean_cut_accuracy,cut_baseline_kind,stage_correlation,wall_time_s\n";
  for (auto side : a.sides) {
    const auto graph = kings_graph(side);
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_batch(graph, batch_config(config));
    const auto stats = aggregate(results, graph);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto n = graph.node_count();
    const double bits = static_cast<double>(n) * std::log2(static_cast<double>(config.colors));
    csv << n << ',' << config.colors << '^' << n << ',' << bits << ',' << config.iterations << ','
        << fixed(stats.best_accuracy, 6) << ',' << fixed(stats.mean_accuracy, 6) << ','
        << fixed(stats.best_cut_accuracy, 6) << ',' << fixed(stats.mean_cut_accuracy, 6) << ','
        << to_string(stats.cut_baseline.kind) << ',' << fixed(stats.stage_correlation, 6) << ','
        << (a.flags.timing ? fixed(elapsed, 3) : std::string("NA")) << '\n';
    if (!a.out_path.empty()) {
      out << n << " nodes: best " << fixed(stats.best_accuracy) << ", mean "
          << fixed(stats.mean_accuracy) << " (" << fixed(elapsed, 2) << " s)\n";
    }
  }
  if (a.out_path.empty()) {
    out << csv.str();
  } else {
    write_text_file(a.out_path, csv.str());
    out << "table written to " << a.out_path << '\n';
  }
  return 0;
}

// --- stats -----------------------------------------------------------------

struct StatsArgs {
  std::string graph_path;
  std::vector<std::string> results;
  std::string out_dir;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  const auto graph = load_graph(a.graph_path);
  std::vector<SolveResult> results;
  for (const auto& path : a.results) {
    results.push_back(solve_result_from_json(read_text_file(path)));
  }
  const auto stats = aggregate(results, graph);
  if (a.out_dir.empty()) {
    out << run_stats_to_json(stats);
    return 0;
  }
  fs::create_directories(a.out_dir);
  write_stats(a.out_dir, stats);
  const auto unlocked = static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const SolveResult& r) { return r.unlocked_warning(); }));
  print_summary(out, stats, unlocked);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase-domain simulator of a multi-stage coupled-oscillator Potts machine"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a King's graph instance");
  gen_cmd->add_option("--kings", gen.side, "grid side length")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", gen.out_path, "output file (.col or .json)")->required();
  gen_cmd->add_option("--format", gen.format, "dimacs or json (default: from extension)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "run a batch of independent solves");
  solve_cmd->add_option("-g,--graph", solve.graph_path, "graph file (.col or .json)")->required();
  solve_cmd->add_option("-o,--output", solve.out_dir, "directory for result and stats files");
  solve_cmd->add_option("--trajectory", solve.trajectory_path,
                        "CSV phase trajectory of iteration 0");
  solve_cmd->add_option("--trajectory-stride", solve.trajectory_stride,
                        "record every N-th step")
      ->check(CLI::PositiveNumber);
  add_run_flags(solve_cmd, solve.flags);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact K-colorability check");
  oracle_cmd->add_option("-g,--graph", oracle.graph_path, "graph file")->required();
  oracle_cmd->add_option("--colors", oracle.colors, "number of colors")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--timeout-ms", oracle.timeout_ms, "search budget")
      ->check(CLI::PositiveNumber);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "batch runs over King's graph sizes");
  bench_cmd->add_option("--sides", bench.sides, "comma-separated grid sides")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--output", bench.out_path, "CSV output file (default stdout)");
  add_run_flags(bench_cmd, bench.flags);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "re-aggregate result JSON files");
  stats_cmd->add_option("-g,--graph", stats.graph_path, "graph the results belong to")->required();
  stats_cmd->add_option("results", stats.results, "result JSON files")->required();
  stats_cmd->add_option("-o,--output", stats.out_dir, "directory for stats.json and stats.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*stats_cmd) return cmd_stats(stats, out);
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace phasepotts::cli
