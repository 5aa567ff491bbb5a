#include <gtest/gtest.h>

#include "dimkit/graph.hpp"
#include "helpers.hpp"

using namespace dimkit;
using namespace dimkit::test;

TEST(GraphParse, PathOnThree) {
  Graph g = parse_graph("3 2\n0 1\n1 2\n");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 2U);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(GraphParse, SingleVertex) {
  Graph g = parse_graph("1 0");
  EXPECT_EQ(g.n(), 1);
  EXPECT_EQ(g.m(), 0U);
}

TEST(GraphParse, CommentsAndBlankLines) {
  Graph g = parse_graph("# header comment\n\n2 1\n# edge follows\n1 0\n");
  EXPECT_EQ(g.m(), 1U);
}

TEST(GraphParse, Errors) {
  EXPECT_THROW(parse_graph("2 1\n0 0\n"), ParseError);
  EXPECT_THROW(parse_graph("2 1\n0 2\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 x\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
  try {
    parse_graph("2 1\n0 0\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
}

TEST(GraphParse, RoundTrip) {
  Graph g = cycle_graph(5);
  Graph h = parse_graph(serialize_graph(g));
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(serialize_graph(g), "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
}

TEST(GraphBasics, Neighbourhoods) {
  Graph c4 = cycle_graph(4);
  EXPECT_EQ(ids(c4.common_neighbors(0, 2)), (Ids{1, 3}));
  Graph k2 = path_graph(2);
  EXPECT_EQ(k2.degree(0), 1);
  EXPECT_TRUE(k2.has_edge(0, 1));
  Graph p3 = path_graph(3);
  EXPECT_TRUE(p3.common_neighbors(0, 1).empty());
  EXPECT_EQ(ids(p3.closed_row(1)), (Ids{0, 1, 2}));
}

TEST(GraphBasics, FromEdgesRejectsBadInput) {
  std::vector<Edge> loop{Edge(1, 1)};
  EXPECT_THROW(Graph::from_edges(2, loop), std::invalid_argument);
  std::vector<Edge> dup{Edge(0, 1), Edge(1, 0)};
  EXPECT_THROW(Graph::from_edges(2, dup), std::invalid_argument);
  std::vector<Edge> range{Edge(0, 5)};
  EXPECT_THROW(Graph::from_edges(2, range), std::invalid_argument);
}

TEST(GraphBasics, Induced) {
  Graph g = cycle_graph(6);
  std::vector<Vertex> keep{1, 2, 3, 5};
  Graph h = g.induced(keep);
  EXPECT_EQ(h.n(), 4);
  EXPECT_EQ(h.m(), 2U);
  EXPECT_TRUE(h.has_edge(0, 1));
  EXPECT_TRUE(h.has_edge(1, 2));
}

TEST(GraphBfs, Levels) {
  Graph p5 = path_graph(5);
  BfsLevels b = bfs_levels(p5, VertexSet(5, {1, 2}));
  ASSERT_EQ(b.levels.size(), 3U);
  EXPECT_EQ(ids(b.levels[1]), (Ids{0, 3}));
  EXPECT_EQ(ids(b.levels[2]), (Ids{4}));

  Graph c6 = cycle_graph(6);
  b = bfs_levels(c6, VertexSet(6, {0, 1}));
  EXPECT_EQ(ids(b.levels[1]), (Ids{2, 5}));
  EXPECT_EQ(ids(b.levels[2]), (Ids{3, 4}));

  Graph k3 = complete_graph(3);
  b = bfs_levels(k3, VertexSet(3, {0, 1}));
  EXPECT_EQ(ids(b.levels[1]), (Ids{2}));
}

TEST(GraphBfs, Within) {
  Graph p5 = path_graph(5);
  BfsLevels b = bfs_levels(p5, VertexSet(5, {0}), VertexSet(5, {0, 1, 3, 4}));
  EXPECT_EQ(ids(b.unreachable), (Ids{3, 4}));
  EXPECT_EQ(b.distance[1], 1);
  EXPECT_EQ(b.distance[3], -1);
}

TEST(GraphComponents, Examples) {
  Graph two = make_graph(4, {{0, 1}, {2, 3}});
  auto comps = connected_components(two);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(ids(comps[0]), (Ids{0, 1}));
  EXPECT_EQ(ids(comps[1]), (Ids{2, 3}));

  EXPECT_EQ(connected_components(cycle_graph(5)).size(), 1U);

  auto split = connected_components(path_graph(4), VertexSet(4, {0, 3}));
  ASSERT_EQ(split.size(), 2U);
  EXPECT_EQ(ids(split[0]), (Ids{0}));
  EXPECT_EQ(ids(split[1]), (Ids{3}));
}

TEST(GraphCentral, Examples) {
  CentralVertex p9 = central_vertex(path_graph(9));
  EXPECT_EQ(p9.vertex, 4);
  EXPECT_EQ(p9.eccentricity, 4);

  CentralVertex star = central_vertex(star_graph(3));
  EXPECT_EQ(star.vertex, 0);
  EXPECT_EQ(star.eccentricity, 1);

  CentralVertex c6 = central_vertex(cycle_graph(6));
  EXPECT_EQ(c6.vertex, 0);
  EXPECT_EQ(c6.eccentricity, 3);

  EXPECT_THROW(central_vertex(make_graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST(GraphNamed, Shapes) {
  EXPECT_EQ(complete_graph(5).m(), 10U);
  EXPECT_EQ(cycle_graph(7).m(), 7U);
  Graph u = disjoint_union(path_graph(2), cycle_graph(3));
  EXPECT_EQ(u.n(), 5);
  EXPECT_TRUE(u.has_edge(2, 4));
  EXPECT_FALSE(u.has_edge(1, 2));
}

TEST(VertexSetOps, Algebra) {
  VertexSet a(130, {1, 64, 129});
  VertexSet b(130, {64, 100});
  EXPECT_EQ(ids(a & b), (Ids{64}));
  EXPECT_EQ(ids(a | b), (Ids{1, 64, 100, 129}));
  EXPECT_EQ(ids(a - b), (Ids{1, 129}));
  EXPECT_EQ(a.first(), 1);
  EXPECT_EQ(a.next(64), 129);
  EXPECT_EQ(a.next(129), kNoVertex);
  EXPECT_TRUE(VertexSet(130, {64}).is_subset_of(a));
  EXPECT_EQ(a.intersection_count(b), 1U);
}
