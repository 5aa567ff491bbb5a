#include "dimkit/patterns.hpp"

#include <algorithm>

namespace dimkit {

std::optional<PatternHit> find_k4(const Graph& g) {
  for (Vertex a = 0; a < g.n(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      VertexSet ab = g.row(a) & g.row(b);
      for (Vertex c = ab.next(b); c != kNoVertex; c = ab.next(c)) {
        VertexSet abc = ab & g.row(c);
        Vertex d = abc.next(c);
        if (d != kNoVertex) return PatternHit{PatternKind::K4, {a, b, c, d}, {}};
      }
    }
  }
  return std::nullopt;
}

std::vector<PatternHit> scan_forced_patterns(const Graph& g) {
  std::vector<PatternHit> hits;
  for (const Edge& mid : g.edges()) {
    std::vector<Vertex> common = g.common_neighbors(mid.u, mid.v).to_vector();
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        Vertex c = common[i], d = common[j];
        if (g.has_edge(c, d)) continue;
        hits.push_back({PatternKind::Diamond, {c, mid.u, d, mid.v}, {mid}});
      }
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    std::vector<Edge> inner;
    for (Vertex a : g.neighbors(u))
      for (Vertex b : g.neighbors(a))
        if (b > a && g.has_edge(u, b)) inner.emplace_back(a, b);
    for (std::size_t i = 0; i < inner.size(); ++i)
      for (std::size_t j = i + 1; j < inner.size(); ++j) {
        const Edge& e = inner[i];
        const Edge& f = inner[j];
        if (e.contains(f.u) || e.contains(f.v)) continue;
        if (g.has_edge(e.u, f.u) || g.has_edge(e.u, f.v) || g.has_edge(e.v, f.u) ||
            g.has_edge(e.v, f.v))
          continue;
        hits.push_back({PatternKind::Butterfly, {e.u, e.v, f.u, f.v, u}, {e, f}});
      }
  }
  std::sort(hits.begin(), hits.end(), [](const PatternHit& a, const PatternHit& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.vertices < b.vertices;
  });
  return hits;
}

namespace {

// Extends an induced path; `blocked` holds every path vertex and every
// neighbour of a non-tip path vertex.
bool extend_path(const Graph& g, const VertexSet& within, int k, std::vector<Vertex>& path,
                 const VertexSet& blocked) {
  if (static_cast<int>(path.size()) == k) return true;
  Vertex tip = path.back();
  VertexSet next_blocked = blocked | g.row(tip);
  VertexSet cand = (g.row(tip) & within) - blocked;
  for (Vertex w = cand.first(); w != kNoVertex; w = cand.next(w)) {
    path.push_back(w);
    VertexSet b = next_blocked;
    b.insert(w);
    if (extend_path(g, within, k, path, b)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PatternHit> find_induced_path(const Graph& g, int k) {
  return find_induced_path(g, k, g.all());
}

std::optional<PatternHit> find_induced_path(const Graph& g, int k, const VertexSet& within) {
  if (k < 1) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex s = within.first(); s != kNoVertex; s = within.next(s)) {
    path.assign(1, s);
    VertexSet blocked = g.empty_set();
    blocked.insert(s);
    if (extend_path(g, within, k, path, blocked))
      return PatternHit{PatternKind::InducedPath, path, {}};
  }
  return std::nullopt;
}

namespace {

struct CycleSearch {
  const Graph& g;
  const VertexSet& within;
  int max_len;
  Vertex start;
  std::vector<Vertex> path;
  std::vector<PatternHit>& out;

  // `inner` = neighbours of path vertices strictly between start and tip.
  void grow(const VertexSet& inner, const VertexSet& on_path) {
    Vertex tip = path.back();
    VertexSet cand = (g.row(tip) & within) - inner - on_path;
    for (Vertex w = cand.first(); w != kNoVertex; w = cand.next(w)) {
      if (w < start) continue;
      bool closes = path.size() >= 2 && g.has_edge(w, start);
      if (closes) {
        if (path[1] < w) {
          std::vector<Vertex> cyc = path;
          cyc.push_back(w);
          out.push_back({PatternKind::InducedCycle, std::move(cyc), {}});
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= max_len) continue;
      VertexSet next_inner = inner;
      if (path.size() >= 2) next_inner |= g.row(tip);
      VertexSet next_on = on_path;
      next_on.insert(w);
      path.push_back(w);
      grow(next_inner, next_on);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<PatternHit> enumerate_short_induced_cycles(const Graph& g, const VertexSet& within,
                                                       int max_len) {
  std::vector<PatternHit> out;
  if (max_len < 3) return out;
  for (Vertex s = within.first(); s != kNoVertex; s = within.next(s)) {
    CycleSearch search{g, within, max_len, s, {s}, out};
    VertexSet on = g.empty_set();
    on.insert(s);
    search.grow(g.empty_set(), on);
  }
  std::sort(out.begin(), out.end(), [](const PatternHit& a, const PatternHit& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace dimkit
