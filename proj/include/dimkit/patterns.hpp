#pragma once

#include <optional>
#include <vector>

#include "dimkit/graph.hpp"

namespace dimkit {

enum class PatternKind { K4, Diamond, Butterfly, InducedPath, InducedCycle };

/// One occurrence of an induced pattern.
///
/// Vertex order: K4 ascending; Diamond (v1, v2, v3, u) with v1v3 the missing
/// edge and u v2 the mid-edge; Butterfly (v1, v2, v3, v4, u) with peripheral
/// edges v1v2 and v3v4; paths in path order; cycles rotated so the smallest
/// vertex comes first, then oriented towards the smaller of its two cycle
/// neighbours.
struct PatternHit {
  PatternKind kind = PatternKind::K4;
  std::vector<Vertex> vertices;
  std::vector<Edge> forced_edges;  // every d.i.m. contains these

  int size() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const PatternHit&, const PatternHit&) = default;
};

/// Lexicographically first K4, if any.
std::optional<PatternHit> find_k4(const Graph& g);

/// Every induced diamond and butterfly, in lexicographic order. Intended for
/// K4-free graphs.
std::vector<PatternHit> scan_forced_patterns(const Graph& g);

/// Some induced path on k vertices (2 <= k <= 9), searched by depth-first
/// extension from each start vertex in id order.
std::optional<PatternHit> find_induced_path(const Graph& g, int k);
std::optional<PatternHit> find_induced_path(const Graph& g, int k, const VertexSet& within);

/// All induced cycles of length 3..max_len inside `within`, each reported
/// once, sorted by (length, vertices).
std::vector<PatternHit> enumerate_short_induced_cycles(const Graph& g, const VertexSet& within,
                                                       int max_len);

}  // namespace dimkit
