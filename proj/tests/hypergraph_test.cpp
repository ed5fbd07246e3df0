#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace hypermat;
using namespace hypermat::testing;

TEST(Hypergraph, EdgesAreSortedAndValidated) {
  Hypergraph h(4, {{2, 0, 1}, {3, 1}});
  EXPECT_EQ(h.num_vertices(), 4u);
  EXPECT_EQ(h.num_edges(), 2u);
  auto e0 = h.edge(0);
  EXPECT_EQ(std::vector<VertexId>(e0.begin(), e0.end()),
            (std::vector<VertexId>{0, 1, 2}));
  EXPECT_FALSE(h.is_loop(1));
  EXPECT_TRUE(Hypergraph(2, {{1}}).is_loop(0));

  EXPECT_HM_ERROR(Hypergraph(3, {{}}), ErrorCode::kEmptyEdge);
  EXPECT_HM_ERROR(Hypergraph(3, {{0, 3}}), ErrorCode::kVertexOutOfRange);
  EXPECT_HM_ERROR(Hypergraph(3, {{1, 1}}), ErrorCode::kDuplicateVertexInEdge);
}

TEST(Hypergraph, ParallelEdgesKeepDistinctIds) {
  Hypergraph h = h0();
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_TRUE(std::equal(h.edge(0).begin(), h.edge(0).end(),
                         h.edge(1).begin(), h.edge(1).end()));
}

TEST(InducedEdges, Examples) {
  Hypergraph a = h0();
  EdgeSet all = a.all_edges();
  EXPECT_EQ(induced_edges(a, all, VertexSet{0, 1, 2}), (EdgeSet{0, 1}));
  EXPECT_TRUE(induced_edges(a, all, VertexSet{0, 1}).empty());

  Hypergraph b = h1();
  EXPECT_EQ(induced_edges(b, b.all_edges(), VertexSet{0, 1, 2}), EdgeSet{0});
  // Restriction to F.
  EdgeSet only_e1{1};
  EXPECT_TRUE(induced_edges(b, only_e1, VertexSet{0, 1, 2}).empty());
}

TEST(CrossEdges, Examples) {
  Hypergraph a = h0();
  EXPECT_EQ(cross_edges(a, a.all_edges(), Partition::singletons(3)),
            (EdgeSet{0, 1}));
  EXPECT_TRUE(cross_edges(a, a.all_edges(), Partition::whole(3)).empty());

  Hypergraph b = h1();
  Partition p(4, {{0, 1, 2}, {3}});
  EXPECT_EQ(cross_edges(b, b.all_edges(), p), (EdgeSet{1, 2}));
  // Partial family: e2 = {0,3} is not inside {0} ∪ {1}.
  std::vector<VertexSet> partial{{0}, {1}};
  EXPECT_TRUE(cross_edges(b, b.all_edges(), partial).empty());

  std::vector<VertexSet> overlapping{{0, 1}, {1, 2}};
  EXPECT_HM_ERROR(cross_edges(b, b.all_edges(), overlapping),
                  ErrorCode::kOverlappingBlocks);
  EdgeSet bad{7};
  EXPECT_HM_ERROR(cross_edges(b, bad, p), ErrorCode::kEdgeOutOfRange);
}

TEST(Partition, CanonicalOrder) {
  Partition p(5, {{4, 2}, {3}, {1, 0}});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.block(0), (VertexSet{0, 1}));
  EXPECT_EQ(p.block(1), (VertexSet{2, 4}));
  EXPECT_EQ(p.block(2), (VertexSet{3}));
  EXPECT_EQ(p, Partition::from_labels(std::vector<std::size_t>{7, 7, 1, 0, 1}));
  auto labels = p.labels(5);
  EXPECT_EQ(labels, (std::vector<std::size_t>{0, 0, 1, 2, 1}));
}

TEST(Partition, RejectsInvalid) {
  EXPECT_HM_ERROR(Partition(3, {{0, 1}}), ErrorCode::kInvalidPartition);
  EXPECT_HM_ERROR(Partition(3, {{0, 1}, {1, 2}}),
                  ErrorCode::kOverlappingBlocks);
  EXPECT_HM_ERROR(Partition(3, {{0, 1, 2}, {}}),
                  ErrorCode::kInvalidPartition);
  EXPECT_HM_ERROR(Partition(2, {{0, 1, 2}}), ErrorCode::kVertexOutOfRange);
}

TEST(EdgeVector, ValidateAndSum) {
  EdgeVector v = vec({q(1, 2), q(3), q(0)});
  EdgeSet s{0, 1};
  EXPECT_EQ(v.sum(s), q(7, 2));
  EXPECT_NO_THROW(v.validate(3));
  EXPECT_HM_ERROR(v.validate(2), ErrorCode::kInvalidArgument);
  EXPECT_HM_ERROR(v.validate(3, true), ErrorCode::kInvalidArgument);
  EXPECT_HM_ERROR(vec({q(-1)}).validate(1), ErrorCode::kNegativeEntry);
}
