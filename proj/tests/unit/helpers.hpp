#pragma once

#include <utility>
#include <vector>

#include "dimkit/coloring.hpp"
#include "dimkit/graph.hpp"

namespace dimkit::test {

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

inline std::vector<Vertex> ids(const VertexSet& s) { return s.to_vector(); }

inline std::vector<std::pair<int, int>> pairs_of(const Matching& m) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : m.edges) out.emplace_back(e.u, e.v);
  return out;
}

using Pairs = std::vector<std::pair<int, int>>;
using Ids = std::vector<Vertex>;

}  // namespace dimkit::test
