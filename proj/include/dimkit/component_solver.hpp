#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dimkit/coloring.hpp"
#include "dimkit/decomposition.hpp"

namespace dimkit {

/// One connected part of the live vertices left after normalization.
struct ComponentTask {
  VertexSet vertices;
  std::uint64_t seed_budget = 3;
  std::uint64_t branch_budget = 1;
};

struct ComponentResult {
  enum class Status { Colored, InfeasibleForXy, BudgetExceeded };
  Status status = Status::InfeasibleForXy;
  Coloring completion;       // total on the component when Colored
  std::vector<Fact> trace;   // facts fired before any branching
  std::uint64_t seeds = 0;
  std::uint64_t branches = 0;
  std::string reason;
};

/// Cycle rules inside S2 plus level 3: a chordless C6 through exactly one S2
/// vertex, a C7 through two, and a C9 whose two S2 vertices are four apart.
Step reduce_cycles_s2n3(const Graph& g, const XyDecomposition& d, Coloring& c,
                        const VertexSet& focus, std::vector<Fact>* log);

/// Level-4 rules: isolated vertices White, isolated edges forced, a C5 over
/// levels 3 and 4 with a single level-4 edge forces it. With d.p9_rules also
/// a C4 with one level-3 vertex and level-4 vertices of level-4 degree >= 3.
Step reduce_n4(const Graph& g, const XyDecomposition& d, Coloring& c, const VertexSet& focus,
               std::vector<Fact>* log);

/// Runs the family, cycle and level-4 rules on `focus` until nothing fires.
Step reduce_to_fixpoint(const Graph& g, const XyDecomposition& d, Coloring& c,
                        const VertexSet& focus, std::vector<Fact>* log);

// Convenience forms acting on d.coloring; they return the facts they fired.
std::vector<Fact> reduce_cycles_s2n3(const Graph& g, XyDecomposition& d, const VertexSet& focus);
std::vector<Fact> reduce_n4(const Graph& g, XyDecomposition& d, const VertexSet& focus);

struct N4Shape {
  enum class Status { Ok, InfeasibleForXy, AssumptionViolated };
  Status status = Status::Ok;
  std::vector<Vertex> component;                // path or cycle order
  bool cycle = false;
  std::vector<std::vector<Color>> colorings;    // parallel to `component`
  std::string detail;
};

/// Live level-4 vertices of `focus` must form one path P_k (3 <= k <= 8) or
/// cycle C_k (k in {3, 6, 9}). Lists the feasible colorings of that part
/// that agree with `c`.
N4Shape validate_n4_shape(const Graph& g, const XyDecomposition& d, const Coloring& c,
                          const VertexSet& focus);

/// Completes the coloring of one component: fixpoint reduction, then one
/// seed per candidate of a designated family (or per level-4 coloring),
/// then depth-first branching. Exact within the budgets.
ComponentResult enumerate_component_colorings(const Graph& g, const XyDecomposition& d,
                                              const Coloring& start, const ComponentTask& task);

}  // namespace dimkit
