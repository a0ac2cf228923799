#pragma once

// JSON and CSV encodings of solver outputs.
//
// SolveResult (schema "phasepotts.solve_result/1"):
//   {"schema", "seed", "colors", "partition", "coloring", "cut_accuracy",
//    "coloring_accuracy", "wall_time", "cut_baseline": {"value", "kind"},
//    "stage1_locked", "final_locked"}
// wall_time is null unless timings are requested, so repeated runs with the
// same seed write byte-identical files.
//
// RunStats (schema "phasepotts.run_stats/1") carries the per-iteration
// records, summary values and both Hamming matrices. The CSV form has one
// row per iteration followed by a summary row.

#include <filesystem>
#include <string>
#include <string_view>

#include "phasepotts/metrics.hpp"
#include "phasepotts/scheduler.hpp"

namespace phasepotts {

inline constexpr std::string_view kSolveResultSchema = "phasepotts.solve_result/1";
inline constexpr std::string_view kRunStatsSchema = "phasepotts.run_stats/1";

std::string solve_result_to_json(const SolveResult& result,
                                 bool include_timing = false);
// Throws ParseError on malformed documents.
SolveResult solve_result_from_json(std::string_view text);

std::string run_stats_to_json(const RunStats& stats);
std::string run_stats_to_csv(const RunStats& stats);

std::string read_text_file(const std::filesystem::path& path);
// Throws IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace phasepotts
