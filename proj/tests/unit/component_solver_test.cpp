#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dimkit/component_solver.hpp"
#include "dimkit/driver.hpp"
#include "dimkit/generator.hpp"
#include "dimkit/oracle.hpp"
#include "helpers.hpp"

using namespace dimkit;
using namespace dimkit::test;

namespace {

XyDecomposition prepared(const Graph& g, Vertex x, Vertex y) {
  auto r = build_levels(g, x, y, Coloring(g.n()), VertexSet::full(g.n()));
  EXPECT_TRUE(std::holds_alternative<XyDecomposition>(r));
  XyDecomposition d = std::get<XyDecomposition>(std::move(r));
  EXPECT_TRUE(apply_initial_facts(g, d));
  return d;
}

// x=0, y=1, 2 on level 1, S2 vertex 3 with level-3 family 4..8 and the
// level-4 vertices 9.. attached one to one (9 to 4, 10 to 5, ...).
Graph ladder(int k4, bool close) {
  std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {2, 3}};
  for (int i = 0; i < k4; ++i) {
    e.emplace_back(3, 4 + i);
    e.emplace_back(4 + i, 4 + k4 + i);
    if (i + 1 < k4) e.emplace_back(4 + k4 + i, 4 + k4 + i + 1);
  }
  if (close) e.emplace_back(4 + k4, 4 + 2 * k4 - 1);
  return make_graph(4 + 2 * k4, e);
}

}  // namespace

TEST(N4Shape, PathHasOneColoring) {
  Graph g = ladder(5, false);
  XyDecomposition d = prepared(g, 0, 1);
  N4Shape s = validate_n4_shape(g, d, d.coloring, d.scope);
  ASSERT_EQ(s.status, N4Shape::Status::Ok) << s.detail;
  EXPECT_FALSE(s.cycle);
  EXPECT_EQ(s.component, (std::vector<Vertex>{9, 10, 11, 12, 13}));
  ASSERT_EQ(s.colorings.size(), 1U);
  using C = Color;
  EXPECT_EQ(s.colorings[0], (std::vector<Color>{C::Black, C::Black, C::White, C::Black, C::Black}));
}

TEST(N4Shape, NineCycleHasThreeColorings) {
  Graph g = ladder(9, true);
  XyDecomposition d = prepared(g, 0, 1);
  N4Shape s = validate_n4_shape(g, d, d.coloring, d.scope);
  ASSERT_EQ(s.status, N4Shape::Status::Ok) << s.detail;
  EXPECT_TRUE(s.cycle);
  EXPECT_EQ(s.colorings.size(), 3U);
}

TEST(N4Shape, RejectedShapes) {
  Graph c4 = ladder(4, true);
  XyDecomposition d = prepared(c4, 0, 1);
  N4Shape s = validate_n4_shape(c4, d, d.coloring, d.scope);
  EXPECT_EQ(s.status, N4Shape::Status::AssumptionViolated);

  // two separate level-4 edges
  Graph two = make_graph(12, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7},
                              {4, 8}, {5, 9}, {8, 9}, {6, 10}, {7, 11}, {10, 11}});
  XyDecomposition d2 = prepared(two, 0, 1);
  N4Shape s2 = validate_n4_shape(two, d2, d2.coloring, d2.scope);
  EXPECT_EQ(s2.status, N4Shape::Status::AssumptionViolated);
  EXPECT_EQ(s2.detail, "level 4 has 2 components");
}

TEST(N4Shape, NoLevelFourIsOk) {
  Graph c6 = cycle_graph(6);
  XyDecomposition d = prepared(c6, 0, 1);
  N4Shape s = validate_n4_shape(c6, d, d.coloring, d.scope);
  EXPECT_EQ(s.status, N4Shape::Status::Ok);
  EXPECT_TRUE(s.component.empty());
}

TEST(N4Rules, IsolatedVertexIsWhiteAfterPropagation) {
  // level-4 vertex 6 sees only the level-3 vertex 5, so it cannot be matched
  Graph g = make_graph(7, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}});
  XyDecomposition d = prepared(g, 0, 1);
  ASSERT_TRUE(d.in_level(6, 4));
  EXPECT_TRUE(d.coloring.white(6));
  EXPECT_TRUE(reduce_n4(g, d, d.scope).empty());
}

TEST(N4Rules, IsolatedEdgeIsForced) {
  Graph g = make_graph(8, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}});
  XyDecomposition d = prepared(g, 0, 1);
  ASSERT_TRUE(d.in_level(6, 4) && d.in_level(7, 4));
  std::vector<Fact> facts = reduce_n4(g, d, d.scope);
  ASSERT_FALSE(facts.empty());
  EXPECT_EQ(facts[0].rule, Rule::N4IsolatedEdge);
  EXPECT_EQ(facts[0].vertices, (std::vector<Vertex>{6, 7}));
}

TEST(Components, LadderCompletes) {
  Graph g = ladder(5, false);
  XyDecomposition d = prepared(g, 0, 1);
  ComponentTask task{VertexSet::full(g.n()), 5, 196};
  ComponentResult r = enumerate_component_colorings(g, d, d.coloring, task);
  ASSERT_EQ(r.status, ComponentResult::Status::Colored) << r.reason;
  EXPECT_EQ(r.completion.mate(3), 6);
  EXPECT_EQ(r.completion.mate(9), 10);
  EXPECT_TRUE(r.completion.white(11));
}

TEST(Components, NoFamilyMemberFitsIsInfeasible) {
  // S2 vertex 3 has the family {4, 5}; either choice leaves a level-4 vertex stranded
  Graph g = make_graph(8, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}});
  XyDecomposition d = prepared(g, 0, 1);
  ComponentTask task{VertexSet::full(g.n()), 5, 64};
  ComponentResult r = enumerate_component_colorings(g, d, d.coloring, task);
  EXPECT_EQ(r.status, ComponentResult::Status::InfeasibleForXy);
}

TEST(Components, CompletesAgreeWithOracle) {
  // for every edge: a completion exists iff some d.i.m. contains the edge
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomDraw draw = gen_random(9, 0.3, seed);
    ASSERT_TRUE(draw.graph);
    const Graph& g = *draw.graph;
    if (connected_components(g).size() != 1) continue;
    std::set<Edge> in_some;
    enumerate_dims(g, [&](const Matching& m) {
      in_some.insert(m.edges.begin(), m.edges.end());
      return true;
    });
    for (const Edge& e : g.edges()) {
      auto r = build_levels(g, e.u, e.v, Coloring(g.n()), VertexSet::full(g.n()), g.n());
      XyDecomposition d = std::get<XyDecomposition>(std::move(r));
      d.wlog = false;
      bool ok = apply_initial_facts(g, d) && normalize_T(g, d);
      Coloring c = d.coloring;
      if (ok) {
        VertexSet rest(static_cast<std::size_t>(g.n()));
        for (Vertex v = 0; v < g.n(); ++v)
          if (c.live(v)) rest.insert(v);
        for (const VertexSet& comp : connected_components(g, rest)) {
          ComponentTask task{comp, 1000, 1'000'000};
          ComponentResult cr = enumerate_component_colorings(g, d, c, task);
          ASSERT_NE(cr.status, ComponentResult::Status::BudgetExceeded);
          if (cr.status != ComponentResult::Status::Colored) {
            ok = false;
            break;
          }
          c = cr.completion;
        }
      }
      if (ok) {
        c.restrict_mates(nullptr);
        EXPECT_TRUE(verify_dim(g, extract_matching(g, c)));
      }
      EXPECT_EQ(ok, in_some.count(e) > 0) << "seed " << seed << " edge " << e.u << "," << e.v;
    }
  }
}

namespace {

// Facts from trying the root edge 0-1 on all of g, without twin pruning.
std::vector<Fact> root_facts(const Graph& g) {
  SolveConfig cfg;
  cfg.wlog = false;
  return try_edge(g, Edge(0, 1), Coloring(g.n()), VertexSet::full(g.n()), cfg, false).facts;
}

bool forced_everywhere(const Graph& g, Edge forced) {
  bool ok = true;
  int with_root = 0;
  enumerate_dims(g, [&](const Matching& m) {
    auto has = [&](Edge e) { return std::find(m.edges.begin(), m.edges.end(), e) != m.edges.end(); };
    if (!has(Edge(0, 1))) return true;
    ++with_root;
    ok = ok && has(forced);
    return true;
  });
  return ok && with_root > 0;
}

bool has_fact(const std::vector<Fact>& facts, Rule r, std::vector<Vertex> vertices) {
  return std::any_of(facts.begin(), facts.end(),
                     [&](const Fact& f) { return f.rule == r && f.vertices == vertices; });
}

}  // namespace

TEST(CycleRules, SixCycleThroughOneS2) {
  Graph g = make_graph(13, {{0, 1}, {0, 2}, {2, 3}, {2, 7}, {2, 10}, {3, 4}, {3, 5}, {3, 6},
                            {4, 12}, {6, 9}, {7, 8}, {7, 9}, {9, 11}, {10, 11}, {10, 12},
                            {11, 12}});
  EXPECT_TRUE(has_fact(root_facts(g), Rule::C6OneS2, {10, 12}));
  EXPECT_TRUE(forced_everywhere(g, Edge(10, 12)));
}

TEST(CycleRules, SevenCycleThroughTwoS2) {
  Graph g = make_graph(13, {{0, 1}, {0, 2}, {2, 3}, {2, 6}, {2, 10}, {3, 4}, {3, 5}, {4, 7},
                            {4, 11}, {6, 7}, {6, 8}, {6, 9}, {9, 12}, {10, 11}, {10, 12}});
  EXPECT_TRUE(has_fact(root_facts(g), Rule::C7TwoS2, {3, 4}));
  EXPECT_TRUE(forced_everywhere(g, Edge(3, 4)));
}

TEST(CycleRules, NineCycleThroughTwoS2) {
  // S2 vertices 3 and 4 sit four apart on 3-5-6-7-4-8-9-10-11; 6 belongs to 12
  Graph g = make_graph(20, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {2, 12}, {2, 13}, {2, 14},
                            {3, 5}, {5, 6}, {6, 7}, {7, 4}, {4, 8}, {8, 9}, {9, 10}, {10, 11},
                            {11, 3}, {12, 6}, {13, 9}, {14, 10}, {12, 15}, {13, 16}, {14, 17},
                            {3, 18}, {4, 19}});
  EXPECT_TRUE(has_fact(root_facts(g), Rule::C9TwoS2, {12, 6}));
  EXPECT_TRUE(forced_everywhere(g, Edge(6, 12)));
}
