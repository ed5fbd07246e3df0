#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace hypermat;
using namespace hypermat::testing;

TEST(Rank, Examples) {
  EXPECT_EQ(rank(h0(), EdgeSet{0, 1}).rank, 2u);
  EXPECT_EQ(rank(h1(), EdgeSet{0, 1, 2}).rank, 3u);
  EXPECT_EQ(rank(Hypergraph(3, {{0}}), EdgeSet{0}).rank, 0u);
  EXPECT_EQ(rank(h1(), EdgeSet{}).rank, 0u);
  Hypergraph three(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  EXPECT_EQ(rank(three, three.all_edges()).rank, 2u);
}

TEST(Rank, WitnessPartitionAttainsTheFormula) {
  Hypergraph h = h1();
  EdgeSet f{0, 2};
  RankResult r = rank(h, f);
  const Partition& p = r.witness_partition;
  EXPECT_EQ(r.rank, h.num_vertices() - p.size() + cross_edges(h, f, p).size());
}

TEST(Independence, Examples) {
  EXPECT_TRUE(is_independent(h0(), EdgeSet{0, 1}));
  Hypergraph three(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  EXPECT_FALSE(is_independent(three, three.all_edges()));
  EXPECT_FALSE(is_independent(Hypergraph(3, {{0, 1}, {2}}), EdgeSet{0, 1}));
  EXPECT_TRUE(is_independent(h1(), EdgeSet{}));
  EXPECT_HM_ERROR(is_independent(h1(), EdgeSet{9}), ErrorCode::kEdgeOutOfRange);
}

TEST(IncrementalIndependence, Examples) {
  Hypergraph two(3, {{0, 1, 2}, {0, 1, 2}});
  EXPECT_TRUE(independence_test_incremental(two, EdgeSet{0}, 1));
  Hypergraph three(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  EXPECT_FALSE(independence_test_incremental(three, EdgeSet{0, 1}, 2));
  EXPECT_TRUE(independence_test_incremental(h1(), EdgeSet{}, 2));
  EXPECT_FALSE(
      independence_test_incremental(Hypergraph(2, {{0}}), EdgeSet{}, 0));
}

TEST(MaxWeightHyperforest, Examples) {
  HyperforestResult r = max_weight_hyperforest(h0(), vec({q(5), q(3)}));
  EXPECT_EQ(r.edges, (EdgeSet{0, 1}));
  EXPECT_EQ(r.weight, q(8));

  r = max_weight_hyperforest(complete_graph(3), vec({q(3), q(2), q(1)}));
  EXPECT_EQ(r.weight, q(5));
  EXPECT_EQ(r.edges, (EdgeSet{0, 1}));

  r = max_weight_hyperforest(h1(), EdgeVector::constant(EdgeRole::kWeight, 3,
                                                        q(0)));
  EXPECT_EQ(r.weight, q(0));
  EXPECT_TRUE(is_independent(h1(), r.edges));
}

TEST(SeparatePolytope, InPolytope) {
  EXPECT_TRUE(separate_polytope(h0(), vec({q(1), q(1)})).in_polytope());
}

TEST(SeparatePolytope, ParallelGraphEdges) {
  Hypergraph h(2, {{0, 1}, {0, 1}});
  SeparationOutcome out = separate_polytope(h, vec({q(1), q(1)}));
  ASSERT_EQ(out.kind, SeparationOutcome::Kind::kSubsetRank);
  EXPECT_EQ(out.vertices, (VertexSet{0, 1}));
  EXPECT_EQ(out.edges, (EdgeSet{0, 1}));
  EXPECT_EQ(out.lhs, q(2));
  EXPECT_EQ(out.rhs, q(1));
  ASSERT_TRUE(out.partition);
  EXPECT_EQ(*out.partition, Partition::whole(2));
}

TEST(SeparatePolytope, BoundChecksComeFirst) {
  SeparationOutcome out = separate_polytope(h0(), vec({q(1), q(6, 5)}));
  EXPECT_EQ(out.kind, SeparationOutcome::Kind::kSingleEdgeRank);
  EXPECT_EQ(out.edges, EdgeSet{1});
  EXPECT_EQ(out.lhs, q(6, 5));

  out = separate_polytope(h0(), vec({q(-1), q(0)}));
  EXPECT_EQ(out.kind, SeparationOutcome::Kind::kNonnegativity);

  out = separate_polytope(Hypergraph(2, {{0}}), vec({q(1, 3)}));
  EXPECT_EQ(out.kind, SeparationOutcome::Kind::kSingleEdgeRank);
  EXPECT_EQ(out.rhs, q(0));
}

TEST(SeparatePolytope, FractionalViolation) {
  // Triangle with x = 3/4 everywhere: x(E) = 9/4 > 2.
  SeparationOutcome out =
      separate_polytope(complete_graph(3), vec({q(3, 4), q(3, 4), q(3, 4)}));
  ASSERT_EQ(out.kind, SeparationOutcome::Kind::kSubsetRank);
  EXPECT_EQ(out.vertices, (VertexSet{0, 1, 2}));
  EXPECT_EQ(out.lhs, q(9, 4));
  EXPECT_EQ(out.rhs, q(2));
}
