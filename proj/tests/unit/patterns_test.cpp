#include <gtest/gtest.h>

#include "dimkit/patterns.hpp"
#include "helpers.hpp"

using namespace dimkit;
using namespace dimkit::test;

namespace {

// v1=0, v2=1, v3=2, u=3: u joined to all, v1v3 missing
Graph diamond() { return make_graph(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}); }

// v1v2 = 0-1, v3v4 = 2-3, u = 4 joined to all four
Graph butterfly() {
  return make_graph(5, {{0, 1}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace

TEST(PatternsK4, Detection) {
  auto hit = find_k4(complete_graph(4));
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->vertices, (Ids{0, 1, 2, 3}));
  EXPECT_FALSE(find_k4(diamond()));
  EXPECT_FALSE(find_k4(cycle_graph(9)));
}

TEST(PatternsForced, DiamondMidEdge) {
  auto hits = scan_forced_patterns(diamond());
  ASSERT_EQ(hits.size(), 1U);
  EXPECT_EQ(hits[0].kind, PatternKind::Diamond);
  ASSERT_EQ(hits[0].forced_edges.size(), 1U);
  EXPECT_EQ(hits[0].forced_edges[0], Edge(1, 3));
}

TEST(PatternsForced, ButterflyPeripheralEdges) {
  auto hits = scan_forced_patterns(butterfly());
  ASSERT_EQ(hits.size(), 1U);
  EXPECT_EQ(hits[0].kind, PatternKind::Butterfly);
  EXPECT_EQ(hits[0].forced_edges, (std::vector<Edge>{Edge(0, 1), Edge(2, 3)}));
}

TEST(PatternsForced, NoneInCycle) { EXPECT_TRUE(scan_forced_patterns(cycle_graph(6)).empty()); }

TEST(PatternsPath, Examples) {
  auto p9 = find_induced_path(path_graph(9), 9);
  ASSERT_TRUE(p9);
  EXPECT_EQ(p9->size(), 9);
  EXPECT_FALSE(find_induced_path(cycle_graph(9), 9));
  auto p8 = find_induced_path(cycle_graph(9), 8);
  ASSERT_TRUE(p8);
  EXPECT_EQ(p8->size(), 8);
  EXPECT_FALSE(find_induced_path(complete_graph(5), 3));
}

TEST(PatternsPath, Within) {
  Graph g = path_graph(9);
  VertexSet part(9, {0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_FALSE(find_induced_path(g, 9, part));
  EXPECT_TRUE(find_induced_path(g, 8, part));
}

TEST(PatternsCycles, Examples) {
  auto c6 = enumerate_short_induced_cycles(cycle_graph(6), cycle_graph(6).all(), 9);
  ASSERT_EQ(c6.size(), 1U);
  EXPECT_EQ(c6[0].vertices, (Ids{0, 1, 2, 3, 4, 5}));

  EXPECT_TRUE(enumerate_short_induced_cycles(path_graph(4), path_graph(4).all(), 9).empty());

  Graph two = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  auto tri = enumerate_short_induced_cycles(two, two.all(), 9);
  ASSERT_EQ(tri.size(), 2U);
  EXPECT_EQ(tri[0].size(), 3);
  EXPECT_EQ(tri[1].vertices, (Ids{3, 4, 5}));
}

TEST(PatternsCycles, LengthCap) {
  Graph c7 = cycle_graph(7);
  EXPECT_TRUE(enumerate_short_induced_cycles(c7, c7.all(), 6).empty());
  EXPECT_EQ(enumerate_short_induced_cycles(c7, c7.all(), 7).size(), 1U);
}
