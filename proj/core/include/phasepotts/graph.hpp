#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace phasepotts {

struct Edge {
  std::size_t i;
  std::size_t j;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Weighted undirected simple graph. Edges are stored once with i < j, sorted
// lexicographically, so two graphs with the same edge set compare equal.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes (i, j) to i < j and sorts. Throws IndexRangeError for an
  // endpoint >= node_count, ParameterError for self-loops or non-finite
  // weights and DuplicateEdgeError when an undirected edge appears twice.
  Graph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  std::size_t degree(std::size_t node) const { return degree_[node]; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  // Indices into edges() of the edges incident to `node`.
  std::span<const std::size_t> incident_edges(std::size_t node) const;

  double total_weight() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
  std::size_t max_degree_ = 0;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<std::size_t> incidence_;
};

// side x side King's graph, row-major node index row * side + col, unit
// weights. Throws ParameterError for side == 0.
Graph kings_graph(std::size_t side);

// Small families used by tests and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

// Subgraph induced by `nodes`; node k of the result is nodes[k].
Graph induced_subgraph(const Graph& graph, std::span<const std::size_t> nodes);

enum class GraphFormat { dimacs_col, json_edges };

// Parses "dimacs" / "col" / "json". Throws ParameterError otherwise.
GraphFormat parse_graph_format(std::string_view name);
// Format implied by the file extension (.json -> json_edges, else dimacs_col).
GraphFormat format_from_extension(const std::filesystem::path& path);

// DIMACS .col: `c` comments, one `p edge n m` line, `e i j` lines (1-indexed,
// optional trailing weight). JSON: {"n": int, "edges": [[i, j] | [i, j, w]]}.
Graph load_graph(const std::filesystem::path& path, GraphFormat format);
Graph load_graph(const std::filesystem::path& path);
Graph parse_graph(std::string_view text, GraphFormat format);

void save_graph(const Graph& graph, const std::filesystem::path& path,
                GraphFormat format);
std::string format_graph(const Graph& graph, GraphFormat format);

}  // namespace phasepotts
