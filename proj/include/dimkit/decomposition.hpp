#pragma once

#include <climits>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dimkit/coloring.hpp"
#include "dimkit/graph.hpp"

namespace dimkit {

/// Named inference rules. Every rule except InVertexTwin yields facts that
/// hold in each d.i.m. containing the root edge (or in each d.i.m. of the
/// graph for the global ones).
enum class Rule : std::uint8_t {
  DiamondMidEdge,
  ButterflyEdges,
  RootEdge,
  N1White,
  M2Edge,
  S2Black,
  S3White,
  OddCycleN3,
  TriangleN3N4,
  EmptyT,
  SingletonT,
  TwoNeighborsInT,
  ThreeTEdges,
  TwoTEdges,
  EdgeInsideT,
  InVertexTwin,
  C6OneS2,
  C7TwoS2,
  C9TwoS2,
  N4Isolated,
  N4IsolatedEdge,
  C5OneN4Edge,
  C4OneN3,
  N4HighDegree,
};

std::string_view rule_name(Rule r);

enum class FactKind : std::uint8_t { ForcedBlack, ForcedWhite, ForcedEdge, Infeasible, Normalization };

std::string_view kind_name(FactKind k);

/// One application of a rule. ForcedEdge names the two ends; ForcedBlack and
/// ForcedWhite name one vertex; Normalization names the vertex whitened
/// without loss of generality; Infeasible lists witnesses.
struct Fact {
  Rule rule = Rule::RootEdge;
  FactKind kind = FactKind::ForcedWhite;
  std::vector<Vertex> vertices;
};

/// Distance levels of a candidate M-edge xy inside `scope`, with the fixed
/// parts of the level structure. Levels are taken in G[scope].
struct XyDecomposition {
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  VertexSet scope;
  std::vector<int> level;         // -1 outside scope
  std::vector<VertexSet> levels;  // levels[0] = {x, y}
  std::vector<Edge> m2;
  std::vector<Vertex> s2;         // u_1..u_k in ascending order
  std::vector<VertexSet> T;       // T[i] = private level-3 neighbours of s2[i]
  std::vector<int> t_owner;       // index into s2, or -1
  VertexSet s3;
  Coloring coloring;
  std::shared_ptr<const MateRestriction> restriction;
  std::vector<Fact> facts;
  bool p9_rules = false;  // rules that need a P9-free, (K4,diamond,butterfly)-free live graph
  bool wlog = true;       // in-vertex twin pruning

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  VertexSet N(int i) const;
  bool in_level(Vertex v, int i) const { return v >= 0 && level[v] == i; }
  int s2_index(Vertex u) const;

  /// T_i member with a live neighbour in another T_j or in level 4.
  bool is_out_vertex(const Graph& g, const Coloring& c, Vertex t) const;
};

struct RadiusExceeded {
  Vertex witness = kNoVertex;
  int distance = 0;
};

/// BFS from {x, y} inside G[scope]. A vertex farther than `max_level` gives
/// RadiusExceeded. All levels from 3 on keep the restriction that no M-edge
/// lies inside level 3 or between levels 3 and 4.
std::variant<XyDecomposition, RadiusExceeded> build_levels(const Graph& g, Vertex x, Vertex y,
                                                           const Coloring& base,
                                                           const VertexSet& scope,
                                                           int max_level = 4);

struct NormalizeOutcome {
  enum class Status { Normalized, InfeasibleForXy };
  Status status = Status::Normalized;
  std::string reason;

  explicit operator bool() const { return status == Status::Normalized; }
  static NormalizeOutcome infeasible(std::string why) {
    return {Status::InfeasibleForXy, std::move(why)};
  }
};

/// Root edge Black, level 1 White, level-2 edges as mates, isolated level-2
/// vertices Black, multi-parent level-3 vertices White, triangle edges in
/// level 4 over a level-3 apex forced, odd cycles inside level 3 rejected.
NormalizeOutcome apply_initial_facts(const Graph& g, XyDecomposition& d);

/// T-family rules to a fixpoint: empty and singleton families, a vertex with
/// two neighbours in another family, three or two edges between families,
/// an edge inside a family, and twin in-vertex pruning.
NormalizeOutcome normalize_T(const Graph& g, XyDecomposition& d);

// Rule plumbing shared with the component solver.

enum class Step { Unchanged, Changed, Contradiction };

/// Applies `f` to `c` and propagates. Appends `f` to `log` (when non-null)
/// if it changed anything or proved infeasibility.
Step apply_fact(const Graph& g, Coloring& c, Fact f, std::vector<Fact>* log);

/// Unknown, or Black without a mate, and inside `d.scope`.
inline bool live_in(const XyDecomposition& d, const Coloring& c, Vertex v) {
  return d.scope.contains(v) && c.live(v);
}

/// One sweep of the T-family rules restricted to `focus`.
Step sweep_t_rules(const Graph& g, const XyDecomposition& d, Coloring& c, const VertexSet& focus,
                   std::vector<Fact>* log);

/// True when `cycle` (in order) induces a chordless cycle in g.
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle);

}  // namespace dimkit
