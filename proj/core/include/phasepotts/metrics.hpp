#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phasepotts/graph.hpp"
#include "phasepotts/scheduler.hpp"

namespace phasepotts {

// Fraction of edges whose endpoints differ; 1.0 for an edgeless graph.
double coloring_accuracy(const Graph& graph, std::span<const int> coloring);

// Total weight of edges with differing labels.
double cut_weight(const Graph& graph, std::span<const int> labels);

// cut_weight / baseline_cut. Can exceed 1 when the baseline is not optimal.
// Throws ParameterError when baseline_cut <= 0.
double cut_accuracy(const Graph& graph, std::span<const int> labels,
                    double baseline_cut);

std::size_t hamming(std::span<const int> a, std::span<const int> b);
// min over r in [0, K) of hamming(a, (b + r) mod K).
std::size_t hamming_min_rotation(std::span<const int> a, std::span<const int> b,
                                 int colors);

// nullopt when either series is constant or the lengths are < 2.
std::optional<double> pearson_correlation(std::span<const double> x,
                                          std::span<const double> y);
std::optional<double> spearman_correlation(std::span<const double> x,
                                           std::span<const double> y);

struct IterationRecord {
  double cut_accuracy = 0.0;
  double coloring_accuracy = 0.0;
  std::uint64_t seed = 0;
};

struct RunStats {
  std::vector<IterationRecord> per_iteration;
  double best_accuracy = 0.0;
  double mean_accuracy = 0.0;
  double best_cut_accuracy = 0.0;
  double mean_cut_accuracy = 0.0;
  std::vector<std::vector<std::size_t>> hamming_matrix;
  std::vector<std::vector<std::size_t>> hamming_rotation_matrix;
  // Pearson between cut and coloring accuracy; 0 when degenerate.
  double stage_correlation = 0.0;
  bool correlation_degenerate = false;
  double spearman_correlation = 0.0;
  CutBaseline cut_baseline;
  int colors = 4;

  std::size_t distinct_solutions() const;
};

// Throws ParameterError for empty input, DimensionError if a coloring does
// not match the graph.
RunStats aggregate(std::span<const SolveResult> results, const Graph& graph);

}  // namespace phasepotts
