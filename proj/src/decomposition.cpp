#include "dimkit/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dimkit {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::DiamondMidEdge: return "diamond-mid-edge";
    case Rule::ButterflyEdges: return "butterfly-peripheral-edges";
    case Rule::RootEdge: return "root-edge";
    case Rule::N1White: return "n1-white";
    case Rule::M2Edge: return "n2-edge";
    case Rule::S2Black: return "s2-black";
    case Rule::S3White: return "s3-white";
    case Rule::OddCycleN3: return "odd-cycle-in-n3";
    case Rule::TriangleN3N4: return "triangle-n3-n4";
    case Rule::EmptyT: return "empty-t";
    case Rule::SingletonT: return "singleton-t";
    case Rule::TwoNeighborsInT: return "two-neighbours-in-t";
    case Rule::ThreeTEdges: return "three-t-edges";
    case Rule::TwoTEdges: return "two-t-edges";
    case Rule::EdgeInsideT: return "edge-inside-t";
    case Rule::InVertexTwin: return "in-vertex-twin";
    case Rule::C6OneS2: return "c6-one-s2";
    case Rule::C7TwoS2: return "c7-two-s2";
    case Rule::C9TwoS2: return "c9-two-s2";
    case Rule::N4Isolated: return "n4-isolated";
    case Rule::N4IsolatedEdge: return "n4-isolated-edge";
    case Rule::C5OneN4Edge: return "c5-one-n4-edge";
    case Rule::C4OneN3: return "c4-one-n3";
    case Rule::N4HighDegree: return "n4-high-degree";
  }
  return "unknown";
}

std::string_view kind_name(FactKind k) {
  switch (k) {
    case FactKind::ForcedBlack: return "black";
    case FactKind::ForcedWhite: return "white";
    case FactKind::ForcedEdge: return "edge";
    case FactKind::Infeasible: return "infeasible";
    case FactKind::Normalization: return "wlog-white";
  }
  return "unknown";
}

VertexSet XyDecomposition::N(int i) const {
  if (i >= 0 && i < static_cast<int>(levels.size())) return levels[i];
  return VertexSet(scope.universe());
}

int XyDecomposition::s2_index(Vertex u) const {
  auto it = std::lower_bound(s2.begin(), s2.end(), u);
  return it != s2.end() && *it == u ? static_cast<int>(it - s2.begin()) : -1;
}

bool XyDecomposition::is_out_vertex(const Graph& g, const Coloring& c, Vertex t) const {
  int own = t_owner[t];
  if (own < 0) return false;
  for (Vertex w : g.neighbors(t)) {
    if (!live_in(*this, c, w)) continue;
    if (level[w] == 4 || (t_owner[w] >= 0 && t_owner[w] != own)) return true;
  }
  return false;
}

std::variant<XyDecomposition, RadiusExceeded> build_levels(const Graph& g, Vertex x, Vertex y,
                                                           const Coloring& base,
                                                           const VertexSet& scope,
                                                           int max_level) {
  if (!g.has_edge(x, y)) throw std::invalid_argument("build_levels: root is not an edge");
  BfsLevels bfs = bfs_levels(g, VertexSet(static_cast<std::size_t>(g.n()), {x, y}), scope);
  if (!bfs.unreachable.empty())
    throw std::invalid_argument("build_levels: scope is not connected");
  int depth = static_cast<int>(bfs.levels.size()) - 1;
  if (depth > max_level) return RadiusExceeded{bfs.levels.back().first(), depth};

  XyDecomposition d;
  d.x = x;
  d.y = y;
  d.scope = scope;
  d.level = std::move(bfs.distance);
  d.levels = std::move(bfs.levels);

  const VertexSet n2 = d.N(2);
  n2.for_each([&](Vertex u) {
    bool isolated = true;
    for (Vertex w : g.neighbors(u)) {
      if (!n2.contains(w)) continue;
      isolated = false;
      if (u < w) d.m2.emplace_back(u, w);
    }
    if (isolated) d.s2.push_back(u);
  });

  const auto n = static_cast<std::size_t>(g.n());
  d.t_owner.assign(n, -1);
  d.T.assign(d.s2.size(), VertexSet(n));
  d.s3 = VertexSet(n);
  d.N(3).for_each([&](Vertex t) {
    int parents = 0;
    Vertex parent = kNoVertex;
    for (Vertex w : g.neighbors(t))
      if (n2.contains(w)) {
        ++parents;
        parent = w;
      }
    if (parents >= 2) {
      d.s3.insert(t);
      return;
    }
    int idx = d.s2_index(parent);
    if (idx >= 0) {
      d.T[idx].insert(t);
      d.t_owner[t] = idx;
    }
  });

  auto r = std::make_shared<MateRestriction>();
  r->zone.assign(n, MateRestriction::kZones - 1);
  scope.for_each([&](Vertex v) {
    r->zone[v] = static_cast<std::uint8_t>(std::min(d.level[v], MateRestriction::kZones - 2));
  });
  r->bar(3, 3);
  r->bar(3, 4);
  d.restriction = r;
  d.coloring = base;
  d.coloring.restrict_mates(r);
  scope.for_each([&](Vertex v) { d.coloring.touch(v); });
  return d;
}

Step apply_fact(const Graph& g, Coloring& c, Fact f, std::vector<Fact>* log) {
  std::optional<Contradiction> k;
  switch (f.kind) {
    case FactKind::ForcedEdge: {
      Vertex u = f.vertices[0], v = f.vertices[1];
      if (c.mate(u) == v) return Step::Unchanged;
      if (log) log->push_back(f);
      k = force_edge(g, c, Edge(u, v));
      break;
    }
    case FactKind::ForcedBlack:
      if (c.black(f.vertices[0])) return Step::Unchanged;
      if (log) log->push_back(f);
      k = assign_and_propagate(g, c, f.vertices[0], Color::Black);
      break;
    case FactKind::ForcedWhite:
    case FactKind::Normalization:
      if (c.white(f.vertices[0])) return Step::Unchanged;
      if (log) log->push_back(f);
      k = assign_and_propagate(g, c, f.vertices[0], Color::White);
      break;
    case FactKind::Infeasible:
      if (log) log->push_back(f);
      return Step::Contradiction;
  }
  return k ? Step::Contradiction : Step::Changed;
}

bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (cycle[i] == cycle[j] || g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

namespace {

struct Sweep {
  const Graph& g;
  const XyDecomposition& d;
  Coloring& c;
  const VertexSet& focus;
  std::vector<Fact>* log;
  bool changed = false;

  // false on contradiction
  bool apply(Rule r, FactKind k, std::vector<Vertex> vs) {
    Step s = apply_fact(g, c, Fact{r, k, std::move(vs)}, log);
    if (s == Step::Changed) changed = true;
    return s != Step::Contradiction;
  }

  bool open_family(int i) const {
    Vertex u = d.s2[i];
    return focus.contains(u) && c.black(u) && c.mate(u) == kNoVertex;
  }

  bool unknown_member(Vertex t, int i) const {
    return t >= 0 && d.t_owner[t] == i && c.unknown(t);
  }

  bool family_sizes() {
    for (std::size_t i = 0; i < d.s2.size(); ++i) {
      if (!open_family(static_cast<int>(i))) continue;
      Vertex u = d.s2[i];
      int cands = 0;
      Vertex last = kNoVertex;
      for (Vertex w : g.neighbors(u))
        if (c.unknown(w) && c.mate_allowed(u, w)) {
          ++cands;
          last = w;
        }
      if (cands == 0) return apply(Rule::EmptyT, FactKind::Infeasible, {u});
      if (cands == 1 && !apply(Rule::SingletonT, FactKind::ForcedEdge, {u, last})) return false;
    }
    return true;
  }

  bool two_neighbours_in_family() {
    std::map<int, int> seen;
    for (Vertex t = focus.first(); t != kNoVertex; t = focus.next(t)) {
      int own = d.t_owner[t];
      if (own < 0 || !c.unknown(t) || !open_family(own)) continue;
      seen.clear();
      for (Vertex w : g.neighbors(t)) {
        int j = d.t_owner[w];
        if (j < 0 || j == own || !c.unknown(w) || !open_family(j)) continue;
        if (++seen[j] == 2) {
          if (!apply(Rule::TwoNeighborsInT, FactKind::ForcedEdge, {d.s2[own], t})) return false;
          break;
        }
      }
    }
    return true;
  }

  bool edges_between_families() {
    std::map<std::pair<int, int>, std::vector<Edge>> between;
    for (Vertex t = focus.first(); t != kNoVertex; t = focus.next(t)) {
      int i = d.t_owner[t];
      if (i < 0 || !c.unknown(t) || !open_family(i)) continue;
      for (Vertex w : g.neighbors(t)) {
        int j = d.t_owner[w];
        if (j <= i || !c.unknown(w) || !open_family(j)) continue;
        between[{i, j}].emplace_back(t, w);
      }
    }
    for (auto& [key, es] : between) {
      if (es.size() < 2) continue;
      std::vector<Vertex> ends;
      for (const Edge& e : es) {
        ends.push_back(e.u);
        ends.push_back(e.v);
      }
      std::sort(ends.begin(), ends.end());
      // a shared end means a vertex with two neighbours in the other family
      if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) continue;
      if (es.size() >= 3) {
        std::vector<Vertex> w(ends.begin(), ends.end());
        return apply(Rule::ThreeTEdges, FactKind::Infeasible, std::move(w));
      }
      for (int fam : {key.first, key.second}) {
        std::vector<Vertex> others;
        d.T[fam].for_each([&](Vertex t) {
          if (c.unknown(t) && !std::binary_search(ends.begin(), ends.end(), t)) others.push_back(t);
        });
        for (Vertex t : others)
          if (!apply(Rule::TwoTEdges, FactKind::ForcedWhite, {t})) return false;
      }
    }
    return true;
  }

  bool edge_inside_family() {
    for (std::size_t i = 0; i < d.s2.size(); ++i) {
      if (!open_family(static_cast<int>(i))) continue;
      std::vector<Vertex> members;
      d.T[i].for_each([&](Vertex t) {
        if (c.unknown(t)) members.push_back(t);
      });
      Edge inner;
      bool found = false;
      for (Vertex a : members) {
        for (Vertex b : g.neighbors(a))
          if (b > a && unknown_member(b, static_cast<int>(i))) {
            inner = Edge(a, b);
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) continue;
      for (Vertex t : members)
        if (!inner.contains(t) && !apply(Rule::EdgeInsideT, FactKind::ForcedWhite, {t}))
          return false;
    }
    return true;
  }

  bool twin_in_vertices() {
    for (std::size_t i = 0; i < d.s2.size(); ++i) {
      if (!open_family(static_cast<int>(i))) continue;
      bool kept = false;
      std::vector<Vertex> surplus;
      d.T[i].for_each([&](Vertex t) {
        if (!c.unknown(t) || g.degree(t) != 1) return;
        if (kept) surplus.push_back(t);
        kept = true;
      });
      for (Vertex t : surplus)
        if (!apply(Rule::InVertexTwin, FactKind::Normalization, {t})) return false;
    }
    return true;
  }
};

}  // namespace

Step sweep_t_rules(const Graph& g, const XyDecomposition& d, Coloring& c, const VertexSet& focus,
                   std::vector<Fact>* log) {
  Sweep s{g, d, c, focus, log};
  bool ok = s.family_sizes() && s.two_neighbours_in_family() && s.edges_between_families() &&
            s.edge_inside_family() && (!d.wlog || s.twin_in_vertices());
  if (!ok) return Step::Contradiction;
  return s.changed ? Step::Changed : Step::Unchanged;
}

namespace {

NormalizeOutcome fail_with(const std::vector<Fact>& facts, const std::string& fallback) {
  if (!facts.empty()) return NormalizeOutcome::infeasible(std::string(rule_name(facts.back().rule)));
  return NormalizeOutcome::infeasible(fallback);
}

// Two-colours G[level 3]; returns an edge closing an odd cycle, if any.
std::optional<Edge> odd_cycle_edge(const Graph& g, const VertexSet& n3) {
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> stack;
  for (Vertex s = n3.first(); s != kNoVertex; s = n3.next(s)) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!n3.contains(w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return Edge(v, w);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

NormalizeOutcome apply_initial_facts(const Graph& g, XyDecomposition& d) {
  Coloring& c = d.coloring;
  std::vector<Fact>* log = &d.facts;
  auto bad = [&](Step s) { return s == Step::Contradiction; };

  if (propagate(g, c)) return NormalizeOutcome::infeasible("restriction conflicts with the coloring");
  if (bad(apply_fact(g, c, {Rule::RootEdge, FactKind::ForcedEdge, {d.x, d.y}}, log)))
    return fail_with(d.facts, "root-edge");
  for (Vertex v : d.N(1).to_vector())
    if (bad(apply_fact(g, c, {Rule::N1White, FactKind::ForcedWhite, {v}}, log)))
      return fail_with(d.facts, "n1-white");
  for (const Edge& e : d.m2)
    if (bad(apply_fact(g, c, {Rule::M2Edge, FactKind::ForcedEdge, {e.u, e.v}}, log)))
      return fail_with(d.facts, "n2-edge");
  for (Vertex u : d.s2)
    if (bad(apply_fact(g, c, {Rule::S2Black, FactKind::ForcedBlack, {u}}, log)))
      return fail_with(d.facts, "s2-black");
  for (Vertex t : d.s3.to_vector())
    if (bad(apply_fact(g, c, {Rule::S3White, FactKind::ForcedWhite, {t}}, log)))
      return fail_with(d.facts, "s3-white");
  if (auto e = odd_cycle_edge(g, d.N(3))) {
    apply_fact(g, c, {Rule::OddCycleN3, FactKind::Infeasible, {e->u, e->v}}, log);
    return NormalizeOutcome::infeasible("odd-cycle-in-n3");
  }
  const VertexSet n3 = d.N(3), n4 = d.N(4);
  std::vector<Edge> apex_edges;
  n4.for_each([&](Vertex b) {
    for (Vertex cc : g.neighbors(b))
      if (cc > b && n4.contains(cc) && g.common_neighbors(b, cc).intersects(n3))
        apex_edges.emplace_back(b, cc);
  });
  for (const Edge& e : apex_edges)
    if (bad(apply_fact(g, c, {Rule::TriangleN3N4, FactKind::ForcedEdge, {e.u, e.v}}, log)))
      return fail_with(d.facts, "triangle-n3-n4");
  return {};
}

NormalizeOutcome normalize_T(const Graph& g, XyDecomposition& d) {
  while (true) {
    Step s = sweep_t_rules(g, d, d.coloring, d.scope, &d.facts);
    if (s == Step::Contradiction) return fail_with(d.facts, "t-normalization");
    if (s == Step::Unchanged) return {};
  }
}

}  // namespace dimkit
