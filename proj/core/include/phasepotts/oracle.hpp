#pragma once

// Exact and constructive baselines the machine is measured against.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phasepotts/graph.hpp"

namespace phasepotts {

using Coloring = std::vector<int>;

struct ColoringSearchLimits {
  std::size_t node_limit = 10'000;
  // Wall-clock budget for the backtracking search; exceeded -> TimeoutError.
  std::chrono::milliseconds time_budget{10'000};
};

// Proper K-coloring by DSATUR-ordered backtracking, or nullopt if none exists.
// Throws SizeLimitError when n > node_limit and TimeoutError on budget.
std::optional<Coloring> exact_coloring(const Graph& graph, int colors,
                                       const ColoringSearchLimits& limits = {});

// color(row, col) = 2 * (row mod 2) + (col mod 2); proper on kings_graph(side).
Coloring constructive_kings_coloring(std::size_t side);

struct MaxCut {
  double best_cut = 0.0;
  std::vector<int> partition;
};

inline constexpr std::size_t kMaxBruteForceNodes = 24;

// Exhaustive max-cut with node 0 fixed to label 0. Throws SizeLimitError for
// n > kMaxBruteForceNodes.
MaxCut brute_force_maxcut(const Graph& graph);

// Cut of the row-parity stripe partition of kings_graph(side):
// side * (side - 1) + 2 * (side - 1)^2. Throws ParameterError for side < 2.
double stripe_cut_value(std::size_t side);

// Row-parity labels for kings_graph(side).
std::vector<int> stripe_partition(std::size_t side);

// side if graph equals kings_graph(side), else nullopt.
std::optional<std::size_t> kings_side(const Graph& graph);

enum class BaselineKind { optimal, best_known, upper_bound };

std::string to_string(BaselineKind kind);
BaselineKind parse_baseline_kind(const std::string& name);

// Denominator for stage-1 cut accuracy:
//   n <= 24       -> brute-force optimum ("optimal")
//   King's graph  -> stripe partition ("best-known")
//   otherwise     -> total positive edge weight ("upper-bound")
struct CutBaseline {
  double value = 0.0;
  BaselineKind kind = BaselineKind::optimal;
};

CutBaseline cut_baseline(const Graph& graph);

}  // namespace phasepotts
