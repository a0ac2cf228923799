#include "phasepotts/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "phasepotts/errors.hpp"

namespace phasepotts {

namespace {

// DSATUR-ordered backtracking. neighbor_colors_(v, c) counts colored
// neighbours of v holding color c; saturation is the number of nonzero counts.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& graph, int colors, std::chrono::milliseconds budget)
      : graph_(graph),
        colors_(colors),
        deadline_(std::chrono::steady_clock::now() + budget),
        coloring_(graph.node_count(), -1),
        counts_(graph.node_count() * static_cast<std::size_t>(colors), 0),
        saturation_(graph.node_count(), 0) {}

  std::optional<Coloring> run() {
    if (search(0, 0)) return coloring_;
    return std::nullopt;
  }

 private:
  int& count(std::size_t v, int c) { return counts_[v * static_cast<std::size_t>(colors_) + c]; }

  std::size_t neighbor(std::size_t edge, std::size_t v) const {
    const auto& e = graph_.edge(edge);
    return e.i == v ? e.j : e.i;
  }

  std::size_t pick() const {
    std::size_t best = graph_.node_count();
    for (std::size_t v = 0; v < graph_.node_count(); ++v) {
      if (coloring_[v] >= 0) continue;
      if (best == graph_.node_count() || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && graph_.degree(v) > graph_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void assign(std::size_t v, int c) {
    coloring_[v] = c;
    for (auto edge : graph_.incident_edges(v)) {
      const auto u = neighbor(edge, v);
      if (count(u, c)++ == 0) ++saturation_[u];
    }
  }

  void unassign(std::size_t v) {
    const int c = coloring_[v];
    coloring_[v] = -1;
    for (auto edge : graph_.incident_edges(v)) {
      const auto u = neighbor(edge, v);
      if (--count(u, c) == 0) --saturation_[u];
    }
  }

  bool search(std::size_t colored, int used) {
    if (colored == graph_.node_count()) return true;
    if ((visited_++ & 1023u) == 0 && std::chrono::steady_clock::now() >= deadline_) {
      throw TimeoutError("exact coloring exceeded its time budget");
    }
    const std::size_t v = pick();
    // Colors beyond `used` are interchangeable; only try the first new one.
    const int limit = std::min(colors_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (count(v, c) != 0) continue;
      assign(v, c);
      if (search(colored + 1, std::max(used, c + 1))) return true;
      unassign(v);
    }
    return false;
  }

  const Graph& graph_;
  int colors_;
  std::chrono::steady_clock::time_point deadline_;
  Coloring coloring_;
  std::vector<int> counts_;
  std::vector<int> saturation_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::optional<Coloring> exact_coloring(const Graph& graph, int colors,
                                       const ColoringSearchLimits& limits) {
  if (graph.node_count() > limits.node_limit) {
    throw SizeLimitError("exact coloring limited to " + std::to_string(limits.node_limit) +
                         " nodes");
  }
  if (colors < 1) throw ParameterError("need at least one color");
  if (graph.node_count() == 0) return Coloring{};
  return DsaturSearch(graph, colors, limits.time_budget).run();
}

Coloring constructive_kings_coloring(std::size_t side) {
  if (side == 0) throw ParameterError("side must be >= 1");
  Coloring out(side * side);
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c)
      out[r * side + c] = static_cast<int>(2 * (r % 2) + (c % 2));
  return out;
}

MaxCut brute_force_maxcut(const Graph& graph) {
  const std::size_t n = graph.node_count();
  if (n > kMaxBruteForceNodes) {
    throw SizeLimitError("brute-force max-cut limited to " +
                         std::to_string(kMaxBruteForceNodes) + " nodes");
  }
  MaxCut best{0.0, std::vector<int>(n, 0)};
  if (n <= 1) return best;

  // Gray-code walk over labels of nodes 1..n-1; node 0 stays 0.
  std::vector<int> labels(n, 0);
  double cut = 0.0;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < total; ++k) {
    const auto v = static_cast<std::size_t>(std::countr_zero(k)) + 1;
    for (auto edge : graph.incident_edges(v)) {
      const auto& e = graph.edge(edge);
      const auto u = e.i == v ? e.j : e.i;
      cut += labels[u] == labels[v] ? e.weight : -e.weight;
    }
    labels[v] ^= 1;
    if (cut > best.best_cut) {
      best.best_cut = cut;
      best.partition = labels;
    }
  }
  return best;
}

double stripe_cut_value(std::size_t side) {
  if (side < 2) throw ParameterError("stripe cut needs side >= 2");
  const auto s = static_cast<double>(side);
  return s * (s - 1.0) + 2.0 * (s - 1.0) * (s - 1.0);
}

std::vector<int> stripe_partition(std::size_t side) {
  std::vector<int> labels(side * side);
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) labels[r * side + c] = static_cast<int>(r % 2);
  return labels;
}

std::optional<std::size_t> kings_side(const Graph& graph) {
  const std::size_t n = graph.node_count();
  std::size_t side = 0;
  while ((side + 1) * (side + 1) <= n) ++side;
  if (side == 0 || side * side != n) return std::nullopt;
  if (graph.edge_count() != 2 * (side - 1) * (2 * side - 1)) return std::nullopt;
  if (!(graph == kings_graph(side))) return std::nullopt;
  return side;
}

std::string to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::optimal: return "optimal";
    case BaselineKind::best_known: return "best-known";
    case BaselineKind::upper_bound: return "upper-bound";
  }
  return "unknown";
}

BaselineKind parse_baseline_kind(const std::string& name) {
  if (name == "optimal") return BaselineKind::optimal;
  if (name == "best-known") return BaselineKind::best_known;
  if (name == "upper-bound") return BaselineKind::upper_bound;
  throw ParameterError("unknown baseline kind '" + name + "'");
}

CutBaseline cut_baseline(const Graph& graph) {
  if (graph.node_count() <= kMaxBruteForceNodes) {
    return {brute_force_maxcut(graph).best_cut, BaselineKind::optimal};
  }
  if (auto side = kings_side(graph)) {
    return {stripe_cut_value(*side), BaselineKind::best_known};
  }
  double positive = 0.0;
  for (const auto& e : graph.edges()) positive += std::max(e.weight, 0.0);
  return {positive, BaselineKind::upper_bound};
}

}  // namespace phasepotts
