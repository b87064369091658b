#include <gtest/gtest.h>

#include <sstream>

#include "domcore/edge_list.hpp"
#include "domcore/error.hpp"
#include "domcore/graph.hpp"
#include "graphs.hpp"

using namespace domcore;

TEST(Graph, BuildAndQuery) {
  const Graph g = fixture::path(4);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.neighbors(1), (VertexSet{0, 2}));
  EXPECT_EQ(g.closed_neighborhood(1), (VertexSet{0, 1, 2}));
  EXPECT_EQ(g.degree(3), 1);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_EQ(g.edges().size(), 3u);
}

TEST(Graph, Errors) {
  EXPECT_THROW(build_graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(build_graph(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(build_graph(65, {}), CapacityError);
  EXPECT_THROW(fixture::path(3).neighbors(3), std::out_of_range);
  std::vector<VertexSet> asym{VertexSet{1}, VertexSet{}};
  EXPECT_THROW(Graph::from_adjacency(2, asym), std::invalid_argument);
  EXPECT_THROW(delete_vertex(Graph{}, 0), std::invalid_argument);
}

TEST(Graph, DistanceShells) {
  const Graph g = fixture::path(5);
  EXPECT_EQ(distance_shell(g, 0, 0), VertexSet{0});
  EXPECT_EQ(distance_shell(g, 0, 1), VertexSet{1});
  EXPECT_EQ(distance_shell(g, 2, 2), (VertexSet{0, 4}));
  EXPECT_TRUE(distance_shell(g, 0, 5).empty());
}

TEST(Graph, DeleteVertexRenumbers) {
  const auto d = delete_vertex_mapped(fixture::path(4), 1);
  EXPECT_EQ(d.graph.order(), 3);
  EXPECT_EQ(d.graph.edge_count(), 1);
  EXPECT_EQ(d.old_to_new, (std::vector<int>{0, -1, 1, 2}));
  EXPECT_TRUE(d.graph.adjacent(1, 2));
}

TEST(Graph, AddPendant) {
  const Graph g = add_pendant(fixture::cycle(4), 2);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.neighbors(4), VertexSet{2});
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_THROW(add_pendant(fixture::cycle(4), 9), std::out_of_range);
}

TEST(Graph, Domination) {
  const Graph g = fixture::path(5);
  EXPECT_TRUE(is_dominating(g, VertexSet{1, 3}));
  EXPECT_FALSE(is_dominating(g, VertexSet{0, 4}));
  EXPECT_EQ(dominated_by(g, VertexSet{0}), (VertexSet{0, 1}));
}

TEST(Graph, PrivateNeighbors) {
  const Graph g = fixture::path(5);
  EXPECT_EQ(private_neighbors(g, 1, VertexSet{1, 3}), (VertexSet{0, 1}));
  EXPECT_EQ(private_neighbors(g, 1, VertexSet{1, 2}), VertexSet{0});
  EXPECT_THROW(private_neighbors(g, 0, VertexSet{1}), std::invalid_argument);
}

TEST(Graph, StructuralHelpers) {
  EXPECT_TRUE(is_clique(fixture::complete(4), VertexSet::range(4)));
  EXPECT_TRUE(is_independent(fixture::cycle(6), VertexSet{0, 2, 4}));
  EXPECT_EQ(cut_vertices(fixture::path(4)), (VertexSet{1, 2}));
  EXPECT_TRUE(cut_vertices(fixture::cycle(5)).empty());
  EXPECT_EQ(connected_components(fixture::empty(3)).size(), 3u);
  EXPECT_TRUE(is_connected(Graph{}));
  EXPECT_FALSE(is_connected(fixture::empty(2)));
  EXPECT_EQ(complement(fixture::complete(4)).edge_count(), 0);
  EXPECT_EQ(complement(fixture::cycle(5)).edge_count(), 5);
}

TEST(Graph, RelabelPreservesEdges) {
  const Graph g = fixture::path(4);
  const std::vector<int> perm{3, 2, 1, 0};
  EXPECT_EQ(relabel(g, perm), g);
  const std::vector<int> swap01{1, 0, 2, 3};
  const Graph h = relabel(g, swap01);
  EXPECT_EQ(h.edge_count(), 3);
  EXPECT_TRUE(h.adjacent(0, 2));
}

TEST(EdgeList, RoundTrip) {
  const Graph g = fixture::petersen();
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeList, CommentsAndErrors) {
  EXPECT_EQ(parse_edge_list("# P3\n3 2\n0 1 # first\n1 2\n"), fixture::path(3));
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), FormatError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), FormatError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), FormatError);
  EXPECT_THROW(parse_edge_list("x"), FormatError);
  EXPECT_THROW(parse_edge_list(""), FormatError);
}
