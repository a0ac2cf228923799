#include "phasepotts/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "phasepotts/errors.hpp"

namespace phasepotts {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.i >= node_count_ || e.j >= node_count_) {
      throw IndexRangeError("edge (" + std::to_string(e.i) + ", " +
                            std::to_string(e.j) + ") out of range for " +
                            std::to_string(node_count_) + " nodes");
    }
    if (e.i == e.j) {
      throw ParameterError("self-loop at node " + std::to_string(e.i));
    }
    if (!std::isfinite(e.weight)) {
      throw ParameterError("non-finite weight on edge (" + std::to_string(e.i) +
                           ", " + std::to_string(e.j) + ")");
    }
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j) {
      throw DuplicateEdgeError("duplicate edge (" + std::to_string(edges_[k].i) +
                               ", " + std::to_string(edges_[k].j) + ")");
    }
  }

  degree_.assign(node_count_, 0);
  for (const auto& e : edges_) {
    ++degree_[e.i];
    ++degree_[e.j];
  }
  max_degree_ = degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());

  incidence_offsets_.assign(node_count_ + 1, 0);
  for (std::size_t v = 0; v < node_count_; ++v) {
    incidence_offsets_[v + 1] = incidence_offsets_[v] + degree_[v];
  }
  incidence_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    incidence_[fill[edges_[k].i]++] = k;
    incidence_[fill[edges_[k].j]++] = k;
  }
}

std::span<const std::size_t> Graph::incident_edges(std::size_t node) const {
  return {incidence_.data() + incidence_offsets_[node],
          incidence_offsets_[node + 1] - incidence_offsets_[node]};
}

double Graph::total_weight() const noexcept {
  double sum = 0.0;
  for (const auto& e : edges_) sum += e.weight;
  return sum;
}

Graph kings_graph(std::size_t side) {
  if (side == 0) throw ParameterError("King's graph side must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(2 * (side - 1) * (2 * side - 1));
  auto id = [side](std::size_t r, std::size_t c) { return r * side + c; };
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      if (c + 1 < side) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < side) {
        edges.push_back({id(r, c), id(r + 1, c)});
        if (c + 1 < side) edges.push_back({id(r, c), id(r + 1, c + 1)});
        if (c > 0) edges.push_back({id(r, c), id(r + 1, c - 1)});
      }
    }
  }
  return Graph(side * side, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph induced_subgraph(const Graph& graph, std::span<const std::size_t> nodes) {
  constexpr auto absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(graph.node_count(), absent);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] >= graph.node_count()) {
      throw IndexRangeError("node " + std::to_string(nodes[k]) + " not in graph");
    }
    local[nodes[k]] = k;
  }
  std::vector<Edge> edges;
  for (const auto& e : graph.edges()) {
    if (local[e.i] != absent && local[e.j] != absent) {
      edges.push_back({local[e.i], local[e.j], e.weight});
    }
  }
  return Graph(nodes.size(), std::move(edges));
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dimacs" || name == "col" || name == "dimacs_col") return GraphFormat::dimacs_col;
  if (name == "json" || name == "json_edges") return GraphFormat::json_edges;
  throw ParameterError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_from_extension(const std::filesystem::path& path) {
  return path.extension() == ".json" ? GraphFormat::json_edges : GraphFormat::dimacs_col;
}

namespace {

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

double parse_weight(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    double w = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return w;
  } catch (const std::exception&) {
    throw ParseError("expected a weight, got '" + token + "'", line);
  }
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(raw);
    std::string tag;
    if (!(line >> tag) || tag == "c") continue;
    std::vector<std::string> tokens;
    for (std::string t; line >> t;) tokens.push_back(t);

    if (tag == "p") {
      if (have_header) throw ParseError("second problem line", line_no);
      if (tokens.size() != 3 || (tokens[0] != "edge" && tokens[0] != "col")) {
        throw ParseError("expected 'p edge <nodes> <edges>'", line_no);
      }
      n = parse_index(tokens[1], line_no);
      parse_index(tokens[2], line_no);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError("edge before problem line", line_no);
      if (tokens.size() != 2 && tokens.size() != 3) {
        throw ParseError("expected 'e <i> <j> [weight]'", line_no);
      }
      const std::size_t a = parse_index(tokens[0], line_no);
      const std::size_t b = parse_index(tokens[1], line_no);
      if (a < 1 || a > n || b < 1 || b > n) {
        throw IndexRangeError("line " + std::to_string(line_no) + ": edge (" + tokens[0] +
                              ", " + tokens[1] + ") outside 1.." + std::to_string(n));
      }
      if (a == b) throw ParseError("self-loop", line_no);
      const double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
      if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
        throw DuplicateEdgeError("line " + std::to_string(line_no) + ": duplicate edge (" +
                                 tokens[0] + ", " + tokens[1] + ")");
      }
      edges.push_back({a - 1, b - 1, w});
    } else {
      throw ParseError("unknown line type '" + tag + "'", line_no);
    }
  }
  if (!have_header) throw ParseError("missing 'p edge' line", line_no);
  return Graph(n, std::move(edges));
}

Graph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(err.what(), 1);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      doc["n"].get<long long>() < 0) {
    throw ParseError("expected object with non-negative integer \"n\"", 1);
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array", 1);
    std::size_t k = 0;
    for (const auto& item : doc["edges"]) {
      const auto where = "edge #" + std::to_string(k++);
      if (!item.is_array() || (item.size() != 2 && item.size() != 3) ||
          !item[0].is_number_integer() || !item[1].is_number_integer() ||
          (item.size() == 3 && !item[2].is_number())) {
        throw ParseError(where + ": expected [i, j] or [i, j, w]", 1);
      }
      const auto a = item[0].get<long long>();
      const auto b = item[1].get<long long>();
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
          static_cast<std::size_t>(b) >= n) {
        throw IndexRangeError(where + " (" + std::to_string(a) + ", " + std::to_string(b) +
                              ") outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      }
      const double w = item.size() == 3 ? item[2].get<double>() : 1.0;
      edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), w});
    }
  }
  return Graph(n, std::move(edges));
}

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs_col ? parse_dimacs(text) : parse_json(text);
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

Graph load_graph(const std::filesystem::path& path) {
  return load_graph(path, format_from_extension(path));
}

std::string format_graph(const Graph& graph, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::dimacs_col) {
    out << "p edge " << graph.node_count() << ' ' << graph.edge_count() << '\n';
    for (const auto& e : graph.edges()) {
      out << "e " << e.i + 1 << ' ' << e.j + 1;
      if (e.weight != 1.0) out << ' ' << format_weight(e.weight);
      out << '\n';
    }
    return out.str();
  }
  // Hand-written so unit-weight edges stay as [i, j] and weights keep 17 digits.
  out << "{\"n\": " << graph.node_count() << ", \"edges\": [";
  bool first = true;
  for (const auto& e : graph.edges()) {
    out << (first ? "" : ", ") << '[' << e.i << ", " << e.j;
    if (e.weight != 1.0) out << ", " << format_weight(e.weight);
    out << ']';
    first = false;
  }
  out << "]}\n";
  return out.str();
}

void save_graph(const Graph& graph, const std::filesystem::path& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_graph(graph, format);
  if (!out.flush()) throw IoError("write failed for " + path.string());
}

}  // namespace phasepotts
