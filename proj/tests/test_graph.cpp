#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace harmcov;
using namespace harmcov::testing;

namespace {

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

GraphMorphism to_point(const Graph& y) {
  Graph p = point();
  std::vector<EdgeImage> em(y.num_edges(), ToVertex{0});
  return GraphMorphism(y, p, std::vector<Vertex>(y.num_vertices(), 0), em);
}

}  // namespace

TEST(Graph, RejectsLoopsAndUnknownVertices) {
  Graph g(2);
  EXPECT_THROW(g.add_edge(0, 0), Error);
  EXPECT_THROW(g.add_edge(0, 5), Error);
  LoopGraph l(1);
  EXPECT_NO_THROW(l.add_edge(0, 0));
  EXPECT_TRUE(l.is_loop(0));
}

TEST(Graph, StableIdentifiersAndLabels) {
  Graph g;
  Vertex a = g.add_vertex("a");
  Vertex b = g.add_vertex();
  EdgeId e0 = g.add_edge(a, b, "x");
  EdgeId e1 = g.add_edge(a, b);
  EXPECT_EQ(e0, 0);
  EXPECT_EQ(e1, 1);
  EXPECT_EQ(g.vertex_label(b), "1");
  EXPECT_EQ(g.edge_label(e0), "x");
  EXPECT_EQ(*g.find_vertex("a"), a);
  EXPECT_FALSE(g.find_vertex("zz").has_value());
  EXPECT_EQ(g.other_end(e1, a), b);
  EXPECT_EQ(g.incident(a), (std::vector<EdgeId>{0, 1}));
}

TEST(Graph, Genus) {
  EXPECT_EQ(genus(cycle_graph(3)), 1);
  EXPECT_EQ(genus(s3_cayley_by_hand().carrier()), 7);
  EXPECT_EQ(genus(path_graph(5)), 0);
  Graph two(2);
  EXPECT_THROW(genus(two), Error);
}

TEST(Graph, Neighborhood) {
  Neighborhood<false> n = neighborhood(star(3), 0);
  EXPECT_EQ(n.graph.num_vertices(), 4);
  EXPECT_EQ(n.graph.num_edges(), 3);
  Graph iso(1);
  Neighborhood<false> m = neighborhood(iso, 0);
  EXPECT_EQ(m.graph.num_vertices(), 1);
  EXPECT_EQ(m.graph.num_edges(), 0);
  // Identity vertex of the S3 Cayley graph: the σ-edge, the σ^-1-edge and two τ-edges.
  Neighborhood<false> c = neighborhood(s3_cayley_by_hand().carrier(), 0);
  EXPECT_EQ(c.graph.num_edges(), 4);
  EXPECT_EQ(c.graph.num_vertices(), 4);
}

TEST(Graph, MorphismValidation) {
  Graph y = segment();
  Graph x = path_graph(3);
  // Edge image whose ends disagree with the vertex map.
  EXPECT_THROW(GraphMorphism(y, x, {0, 1}, {ToEdge{1}}), Error);
  // Vertical edge whose ends go to different vertices.
  EXPECT_THROW(GraphMorphism(y, x, {0, 1}, {ToVertex{0}}), Error);
  EXPECT_NO_THROW(GraphMorphism(y, x, {0, 1}, {ToEdge{0}}));
}

TEST(Graph, Harmonic) {
  GraphMorphism cay = to_point(s3_cayley_by_hand().carrier());
  EXPECT_TRUE(is_harmonic(cay));
  EXPECT_EQ(degree(cay), 6);
  EXPECT_TRUE(is_degenerate_at(cay, 0));

  GraphMorphism id = identity_morphism(cycle_graph(4));
  EXPECT_TRUE(is_harmonic(id));
  EXPECT_EQ(degree(id), 1);
  EXPECT_FALSE(is_degenerate_at(id, 0));

  // Edge a-b over the path u-v-w, a->u, b->v: at b the count is 1 for uv, 0 for vw.
  GraphMorphism bad(segment(), path_graph(3), {0, 1}, {ToEdge{0}});
  EXPECT_FALSE(is_harmonic(bad));
  EXPECT_EQ(is_harmonic(bad), oracle::harmonic(bad));

  PointedCover z2 = z2_segment_cover_with_loops();
  EXPECT_TRUE(is_harmonic(z2.projection()));
  EXPECT_EQ(degree(z2.projection()), 2);
  for (Vertex w = 0; w < z2.carrier().num_vertices(); ++w) EXPECT_FALSE(is_degenerate_at(z2.projection(), w));
}

TEST(Graph, SpanningTree) {
  SpanningTree t = spanning_tree(path_graph(4), 0);
  EXPECT_EQ(t.tree_edges.size(), 3u);
  EXPECT_TRUE(t.nontree.empty());

  for (Vertex r = 0; r < 3; ++r) {
    SpanningTree tri = spanning_tree(cycle_graph(3), r);
    EXPECT_EQ(tri.root, r);
    EXPECT_EQ(tri.tree_edges.size(), 2u);
    EXPECT_EQ(tri.nontree.size(), 1u);
  }
  SpanningTree c = spanning_tree(s3_cayley_by_hand().carrier(), 0);
  EXPECT_EQ(c.tree_edges.size(), 5u);
  EXPECT_EQ(c.nontree.size(), 7u);

  Graph tri = cycle_graph(3);
  EXPECT_THROW(SpanningTree::from_nontree(tri, 0, {}), Error);
  SpanningTree ok = SpanningTree::from_nontree(tri, 0, {{2, 2, 0}});
  EXPECT_EQ(ok.tree_edges, (std::vector<EdgeId>{0, 1}));
}

TEST(Graph, ContractLoops) {
  LoopGraph xf(2);
  xf.add_edge(0, 1);
  xf.add_edge(0, 0);
  xf.add_edge(0, 0);
  xf.add_edge(1, 1);
  Graph c = contract_loops(xf);
  EXPECT_TRUE(c.same_structure(segment()));

  LoopGraph rose(1);
  for (int i = 0; i < 4; ++i) rose.add_edge(0, 0);
  EXPECT_EQ(contract_loops(rose).num_vertices(), 1);
  EXPECT_EQ(contract_loops(rose).num_edges(), 0);

  EXPECT_TRUE(contract_loops(to_loop_graph(cycle_graph(5))).same_structure(cycle_graph(5)));
}

TEST(Graph, Components) {
  EXPECT_EQ(connected_components(cycle_graph(4)).size(), 1u);
  EXPECT_EQ(connected_components(Graph(5)).size(), 5u);
  FiniteGroup g = s3();
  EXPECT_EQ(connected_components(cayley_graph(g, SymmetricMultiset(g)).carrier()).size(), 6u);
}

TEST(Graph, Isomorphism) {
  Graph a = s3_cayley_by_hand().carrier();
  EXPECT_TRUE(graphs_isomorphic(a, a).has_value());
  EXPECT_TRUE(graphs_isomorphic(a, z6_cayley_by_hand().carrier()).has_value());
  EXPECT_FALSE(graphs_isomorphic(cycle_graph(3), path_graph(3)).has_value());

  // The witness really is an isomorphism.
  Graph b = z6_cayley_by_hand().carrier();
  GraphIsomorphism iso = *graphs_isomorphic(a, b);
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    EdgeEnds s = a.ends(e);
    EdgeEnds t = b.ends(iso.edge_map[e]);
    std::set<Vertex> want{iso.vertex_map[s.u], iso.vertex_map[s.v]};
    EXPECT_EQ(want, (std::set<Vertex>{t.u, t.v}));
  }
  Graph huge(kIsomorphismVertexLimit + 1);
  EXPECT_THROW(graphs_isomorphic(huge, huge), Error);
}
