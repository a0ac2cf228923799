#include "phasepotts/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phasepotts/errors.hpp"

namespace phasepotts {

using json = nlohmann::ordered_json;

std::string solve_result_to_json(const SolveResult& result, bool include_timing) {
  json doc;
  doc["schema"] = kSolveResultSchema;
  doc["seed"] = result.seed;
  doc["colors"] = result.colors;
  doc["partition"] = result.partition;
  doc["coloring"] = result.coloring;
  doc["cut_accuracy"] = result.cut_accuracy;
  doc["coloring_accuracy"] = result.coloring_accuracy;
  doc["wall_time"] = include_timing ? json(result.wall_time) : json(nullptr);
  doc["cut_baseline"] = {{"value", result.cut_baseline.value},
                         {"kind", to_string(result.cut_baseline.kind)}};
  doc["stage1_locked"] = result.stage1_locked;
  doc["final_locked"] = result.final_locked;
  return doc.dump(2) + "\n";
}

SolveResult solve_result_from_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    if (doc.value("schema", std::string()) != kSolveResultSchema) {
      throw ParseError("not a " + std::string(kSolveResultSchema) + " document", 1);
    }
    SolveResult r;
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.colors = doc.at("colors").get<int>();
    r.partition = doc.at("partition").get<std::vector<int>>();
    r.coloring = doc.at("coloring").get<std::vector<int>>();
    r.cut_accuracy = doc.at("cut_accuracy").get<double>();
    r.coloring_accuracy = doc.at("coloring_accuracy").get<double>();
    r.wall_time = doc.at("wall_time").is_null() ? 0.0 : doc.at("wall_time").get<double>();
    r.cut_baseline.value = doc.at("cut_baseline").at("value").get<double>();
    r.cut_baseline.kind =
        parse_baseline_kind(doc.at("cut_baseline").at("kind").get<std::string>());
    r.stage1_locked = doc.at("stage1_locked").get<bool>();
    r.final_locked = doc.at("final_locked").get<bool>();
    return r;
  } catch (const json::exception& err) {
    throw ParseError(err.what(), 1);
  }
}

std::string run_stats_to_json(const RunStats& stats) {
  json doc;
  doc["schema"] = kRunStatsSchema;
  doc["iterations"] = stats.per_iteration.size();
  doc["colors"] = stats.colors;
  doc["best_accuracy"] = stats.best_accuracy;
  doc["mean_accuracy"] = stats.mean_accuracy;
  doc["best_cut_accuracy"] = stats.best_cut_accuracy;
  doc["mean_cut_accuracy"] = stats.mean_cut_accuracy;
  doc["cut_baseline"] = {{"value", stats.cut_baseline.value},
                         {"kind", to_string(stats.cut_baseline.kind)}};
  doc["stage_correlation"] = stats.stage_correlation;
  doc["correlation_degenerate"] = stats.correlation_degenerate;
  doc["spearman_correlation"] = stats.spearman_correlation;
  doc["distinct_solutions"] = stats.distinct_solutions();
  json rows = json::array();
  for (const auto& it : stats.per_iteration) {
    rows.push_back({{"seed", it.seed},
                    {"cut_accuracy", it.cut_accuracy},
                    {"coloring_accuracy", it.coloring_accuracy}});
  }
  doc["per_iteration"] = rows;
  doc["hamming_matrix"] = stats.hamming_matrix;
  doc["hamming_rotation_matrix"] = stats.hamming_rotation_matrix;
  return doc.dump(2) + "\n";
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string run_stats_to_csv(const RunStats& stats) {
  std::ostringstream out;
  out << "row,iteration,seed,cut_accuracy,coloring_accuracy,best_accuracy,mean_accuracy,"
         "stage_correlation,cut_baseline,cut_baseline_kind\n";
  for (std::size_t k = 0; k < stats.per_iteration.size(); ++k) {
    const auto& it = stats.per_iteration[k];
    out << "iteration," << k << ',' << it.seed << ',' << fmt(it.cut_accuracy) << ','
        << fmt(it.coloring_accuracy) << ",,,,,\n";
  }
  out << "summary,,," << fmt(stats.mean_cut_accuracy) << ',' << fmt(stats.mean_accuracy) << ','
      << fmt(stats.best_accuracy) << ',' << fmt(stats.mean_accuracy) << ','
      << fmt(stats.stage_correlation) << ',' << fmt(stats.cut_baseline.value) << ','
      << to_string(stats.cut_baseline.kind) << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw IoError("write failed for " + path.string());
}

}  // namespace phasepotts
