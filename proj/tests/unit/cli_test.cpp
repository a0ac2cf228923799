#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "phasepotts/graph.hpp"
#include "phasepotts/serialization.hpp"
#include "run_config.hpp"
#include "phasepotts/errors.hpp"
#include "test_support.hpp"

namespace phasepotts::cli {
namespace {

using phasepotts::testing::TempDir;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "phasepotts");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliGen, Kings7Dimacs) {
  TempDir dir;
  const auto path = (dir / "g.col").string();
  const auto r = run_cli({"gen", "--kings", "7", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("49 nodes, 156 edges"), std::string::npos);
  EXPECT_EQ(load_graph(path), kings_graph(7));
}

TEST(CliGen, SingleNodeJson) {
  TempDir dir;
  const auto path = (dir / "g.json").string();
  ASSERT_EQ(run_cli({"gen", "--kings", "1", "-o", path}).code, 0);
  const auto g = load_graph(path);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(CliGen, ZeroSideIsUsageError) {
  EXPECT_NE(run_cli({"gen", "--kings", "0", "-o", "x.col"}).code, 0);
  EXPECT_NE(run_cli({"gen"}).code, 0);
  EXPECT_NE(run_cli({}).code, 0);
}

TEST(CliSolve, K4BestAccuracyOne) {
  TempDir dir;
  const auto graph = (dir / "k4.json").string();
  save_graph(kings_graph(2), graph, GraphFormat::json_edges);
  const auto out = (dir / "out").string();
  const auto r = run_cli({"solve", "-g", graph, "--colors", "4", "--iters", "20", "--seed", "1",
                          "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("best accuracy:     1.0000"), std::string::npos) << r.out;
  const auto stats = nlohmann::json::parse(read_text_file(dir / "out/stats.json"));
  EXPECT_EQ(stats["best_accuracy"].get<double>(), 1.0);
  EXPECT_EQ(stats["iterations"].get<int>(), 20);
  for (int k = 0; k < 20; ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "out/result_%03d.json", k);
    EXPECT_NO_THROW(solve_result_from_json(read_text_file(dir / name)));
  }
}

TEST(CliSolve, RepeatedRunsAreByteIdentical) {
  TempDir dir;
  const auto graph = (dir / "g.col").string();
  save_graph(kings_graph(5), graph, GraphFormat::dimacs_col);
  for (const char* sub : {"a", "b"}) {
    ASSERT_EQ(run_cli({"solve", "-g", graph, "--iters", "1", "--seed", "7", "-o",
                       (dir / sub).string()}).code, 0);
  }
  for (const char* f : {"result_000.json", "stats.json", "stats.csv"}) {
    EXPECT_EQ(read_text_file(dir / "a" / f), read_text_file(dir / "b" / f)) << f;
  }
}

TEST(CliSolve, MissingGraph) {
  const auto r = run_cli({"solve", "-g", "/nonexistent/missing.json"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(CliSolve, InvalidConfig) {
  TempDir dir;
  const auto graph = (dir / "g.col").string();
  save_graph(kings_graph(2), graph, GraphFormat::dimacs_col);
  EXPECT_NE(run_cli({"solve", "-g", graph, "--colors", "3"}).code, 0);
  EXPECT_NE(run_cli({"solve", "-g", graph, "--iters", "0"}).code, 0);
  EXPECT_NE(run_cli({"solve", "-g", graph, "--dt", "0.2"}).code, 0);
}

TEST(CliSolve, ConfigFileAndFlagOverride) {
  TempDir dir;
  const auto graph = (dir / "g.col").string();
  save_graph(kings_graph(3), graph, GraphFormat::dimacs_col);
  const auto cfg = dir / "run.cfg";
  write_text_file(cfg, "# test\niterations = 3\nseed = 11\n");
  ASSERT_EQ(run_cli({"solve", "-g", graph, "--config", cfg.string(), "-o",
                     (dir / "a").string()}).code, 0);
  auto stats = nlohmann::json::parse(read_text_file(dir / "a/stats.json"));
  EXPECT_EQ(stats["iterations"].get<int>(), 3);
  ASSERT_EQ(run_cli({"solve", "-g", graph, "--config", cfg.string(), "--iters", "2", "-o",
                     (dir / "b").string()}).code, 0);
  stats = nlohmann::json::parse(read_text_file(dir / "b/stats.json"));
  EXPECT_EQ(stats["iterations"].get<int>(), 2);
}

TEST(CliSolve, TrajectoryDump) {
  TempDir dir;
  const auto graph = (dir / "g.col").string();
  save_graph(kings_graph(2), graph, GraphFormat::dimacs_col);
  const auto traj = (dir / "t.csv").string();
  ASSERT_EQ(run_cli({"solve", "-g", graph, "--iters", "1", "--trajectory", traj,
                     "--trajectory-stride", "100"}).code, 0);
  const auto text = read_text_file(traj);
  EXPECT_EQ(text.substr(0, text.find('\n')), "time,theta_0,theta_1,theta_2,theta_3");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 61);  // 6001 states / 100
}

TEST(CliOracle, Examples) {
  TempDir dir;
  const auto k7 = (dir / "k7.col").string();
  const auto k5 = (dir / "k5.col").string();
  const auto k4 = (dir / "k4.col").string();
  save_graph(kings_graph(7), k7, GraphFormat::dimacs_col);
  save_graph(complete_graph(5), k5, GraphFormat::dimacs_col);
  save_graph(complete_graph(4), k4, GraphFormat::dimacs_col);
  auto r = run_cli({"oracle", "-g", k7, "--colors", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("colorable", 0), 0u);
  EXPECT_NE(r.out.find("witness:"), std::string::npos);
  r = run_cli({"oracle", "-g", k5, "--colors", "4"});
  EXPECT_NE(r.out.find("not colorable"), std::string::npos);
  r = run_cli({"oracle", "-g", k4, "--colors", "1"});
  EXPECT_NE(r.out.find("not colorable"), std::string::npos);
}

TEST(CliBench, RowsInAscendingOrder) {
  const auto r = run_cli({"bench", "--sides", "7,2", "--iters", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].rfind("size,search_space,", 0), 0u);
  EXPECT_EQ(lines[1].rfind("4,4^4,8,5,1.000000,", 0), 0u) << lines[1];
  EXPECT_EQ(lines[2].rfind("49,4^49,98,5,", 0), 0u) << lines[2];
}

TEST(CliStats, ReaggregatesResultFiles) {
  TempDir dir;
  const auto graph = (dir / "g.col").string();
  save_graph(kings_graph(4), graph, GraphFormat::dimacs_col);
  ASSERT_EQ(run_cli({"solve", "-g", graph, "--iters", "3", "-o", (dir / "run").string()}).code, 0);
  const auto r = run_cli({"stats", "-g", graph, (dir / "run/result_000.json").string(),
                          (dir / "run/result_001.json").string(),
                          (dir / "run/result_002.json").string(), "-o",
                          (dir / "again").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_text_file(dir / "run/stats.json"), read_text_file(dir / "again/stats.json"));
  EXPECT_EQ(read_text_file(dir / "run/stats.csv"), read_text_file(dir / "again/stats.csv"));
}

TEST(RunConfigFile, ParsesAndRejects) {
  RunConfig c;
  apply_config_text(c, "coupling = 0.5\n shil=3 # comment\nt_anneal2 = 10\ncolors = 8\n");
  EXPECT_EQ(c.dynamics.coupling, 0.5);
  EXPECT_EQ(c.dynamics.shil, 3.0);
  EXPECT_EQ(c.plan.t_anneal2, 10.0);
  EXPECT_EQ(c.stages(), 3);
  EXPECT_THROW(apply_config_text(c, "bogus = 1\n"), ParseError);
  EXPECT_THROW(apply_config_text(c, "iterations = -1\n"), ParseError);
  EXPECT_THROW(apply_config_text(c, "no equals sign\n"), ParseError);
  RunConfig round;
  apply_config_text(round, format_config(c));
  EXPECT_EQ(format_config(round), format_config(c));
}

TEST(RunConfigFile, DefaultsMatchSixtyUnitSchedule) {
  const RunConfig c;
  EXPECT_EQ(c.iterations, 40u);
  EXPECT_EQ(c.plan.t_init, 5.0);
  EXPECT_EQ(c.plan.t_anneal1, 20.0);
  EXPECT_EQ(c.plan.t_lock1, 5.0);
  EXPECT_EQ(c.plan.t_relax, 5.0);
  EXPECT_EQ(c.plan.t_anneal2, 20.0);
  EXPECT_EQ(c.plan.t_lock2, 5.0);
}

}  // namespace
}  // namespace phasepotts::cli
