#pragma once

#include <compare>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dimkit/vertex_set.hpp"

namespace dimkit {

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex w) const { return w == u || w == v; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Error raised when graph or matching text does not follow the file format.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph. Adjacency is kept twice: as bit rows
/// for set algebra and as sorted lists for traversal.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, out-of-range ids or
  /// duplicate edges.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  std::size_t m() const { return m_; }

  const VertexSet& row(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].contains(v); }

  /// N(u) ∩ N(v) \ {u, v}.
  VertexSet common_neighbors(Vertex u, Vertex v) const;
  VertexSet closed_row(Vertex v) const;
  VertexSet all() const { return VertexSet::full(static_cast<std::size_t>(n_)); }
  VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n_)); }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> adj_;
};

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Canonical text form: "n m" then one "u v" line per edge (u < v, sorted).
std::string serialize_graph(const Graph& g);

/// Distance layers from a seed set, restricted to `within`.
struct BfsLevels {
  std::vector<VertexSet> levels;  // levels[0] is the seed
  VertexSet unreachable;          // members of `within` not reached
  std::vector<int> distance;      // -1 outside `within` or unreachable
};

BfsLevels bfs_levels(const Graph& g, const VertexSet& seed);
BfsLevels bfs_levels(const Graph& g, const VertexSet& seed, const VertexSet& within);

/// Components of G[within], ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> connected_components(const Graph& g);

struct CentralVertex {
  Vertex vertex = kNoVertex;
  int eccentricity = 0;
};

/// Minimum-eccentricity vertex of G[within] (smallest id on ties). Throws
/// std::invalid_argument if G[within] is empty or disconnected.
CentralVertex central_vertex(const Graph& g, const VertexSet& within);
CentralVertex central_vertex(const Graph& g);

// Small named graphs used by tests, examples and generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace dimkit
