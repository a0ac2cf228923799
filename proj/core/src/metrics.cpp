#include "phasepotts/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "phasepotts/errors.hpp"

namespace phasepotts {

namespace {

void require_nodes(const Graph& graph, std::size_t size, const char* what) {
  if (size != graph.node_count()) {
    throw DimensionError(std::string(what) + " has " + std::to_string(size) +
                         " entries, graph has " + std::to_string(graph.node_count()) + " nodes");
  }
}

// Average ranks, ties share the mean rank.
std::vector<double> ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t k = 0; k < order.size();) {
    std::size_t end = k;
    while (end + 1 < order.size() && x[order[end + 1]] == x[order[k]]) ++end;
    const double rank = 0.5 * static_cast<double>(k + end) + 1.0;
    for (std::size_t m = k; m <= end; ++m) r[order[m]] = rank;
    k = end + 1;
  }
  return r;
}

}  // namespace

double coloring_accuracy(const Graph& graph, std::span<const int> coloring) {
  require_nodes(graph, coloring.size(), "coloring");
  if (graph.edge_count() == 0) return 1.0;
  std::size_t satisfied = 0;
  for (const auto& e : graph.edges()) {
    if (coloring[e.i] != coloring[e.j]) ++satisfied;
  }
  return static_cast<double>(satisfied) / static_cast<double>(graph.edge_count());
}

double cut_weight(const Graph& graph, std::span<const int> labels) {
  require_nodes(graph, labels.size(), "partition");
  double cut = 0.0;
  for (const auto& e : graph.edges()) {
    if (labels[e.i] != labels[e.j]) cut += e.weight;
  }
  return cut;
}

double cut_accuracy(const Graph& graph, std::span<const int> labels, double baseline_cut) {
  if (!(baseline_cut > 0.0)) throw ParameterError("baseline cut must be > 0");
  return cut_weight(graph, labels) / baseline_cut;
}

std::size_t hamming(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw DimensionError("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t hamming_min_rotation(std::span<const int> a, std::span<const int> b, int colors) {
  if (a.size() != b.size()) throw DimensionError("hamming: length mismatch");
  if (colors < 1) throw ParameterError("colors must be >= 1");
  std::size_t best = a.size();
  for (int r = 0; r < colors; ++r) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != (b[i] + r) % colors;
    best = std::min(best, d);
  }
  return best;
}

std::optional<double> pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("correlation: length mismatch");
  if (x.size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> spearman_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("correlation: length mismatch");
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  return pearson_correlation(rx, ry);
}

std::size_t RunStats::distinct_solutions() const {
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < hamming_matrix.size(); ++i) {
    bool repeat = false;
    for (std::size_t j = 0; j < i && !repeat; ++j) repeat = hamming_matrix[i][j] == 0;
    if (!repeat) ++distinct;
  }
  return distinct;
}

RunStats aggregate(std::span<const SolveResult> results, const Graph& graph) {
  if (results.empty()) throw ParameterError("aggregate needs at least one result");
  RunStats stats;
  stats.colors = results.front().colors;
  stats.cut_baseline = results.front().cut_baseline;

  const std::size_t count = results.size();
  std::vector<double> cut(count), color(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& r = results[k];
    require_nodes(graph, r.coloring.size(), "coloring");
    require_nodes(graph, r.partition.size(), "partition");
    stats.per_iteration.push_back({r.cut_accuracy, r.coloring_accuracy, r.seed});
    cut[k] = r.cut_accuracy;
    color[k] = r.coloring_accuracy;
  }
  stats.best_accuracy = *std::max_element(color.begin(), color.end());
  stats.mean_accuracy = std::accumulate(color.begin(), color.end(), 0.0) / count;
  stats.best_cut_accuracy = *std::max_element(cut.begin(), cut.end());
  stats.mean_cut_accuracy = std::accumulate(cut.begin(), cut.end(), 0.0) / count;

  stats.hamming_matrix.assign(count, std::vector<std::size_t>(count, 0));
  stats.hamming_rotation_matrix.assign(count, std::vector<std::size_t>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      const auto raw = hamming(results[a].coloring, results[b].coloring);
      const auto rot = hamming_min_rotation(results[a].coloring, results[b].coloring, stats.colors);
      stats.hamming_matrix[a][b] = stats.hamming_matrix[b][a] = raw;
      stats.hamming_rotation_matrix[a][b] = stats.hamming_rotation_matrix[b][a] = rot;
    }
  }

  const auto pearson = pearson_correlation(cut, color);
  stats.correlation_degenerate = !pearson.has_value();
  stats.stage_correlation = pearson.value_or(0.0);
  stats.spearman_correlation = spearman_correlation(cut, color).value_or(0.0);
  return stats;
}

}  // namespace phasepotts
