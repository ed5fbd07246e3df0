#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace hypermat;
using namespace hypermat::testing;

TEST(MinPartition, H0Fractional) {
  PartitionOracleResult r = min_partition(h0(), vec({q(1), q(1, 2)}), q(1));
  EXPECT_EQ(r.value, q(-1, 2));
  EXPECT_EQ(r.partition, Partition::singletons(3));
  EXPECT_TRUE(r.violated);
}

TEST(MinPartition, H0Tight) {
  PartitionOracleResult r = min_partition(h0(), vec({q(1), q(1)}), q(1));
  EXPECT_EQ(r.value, q(0));
  EXPECT_FALSE(r.violated);
}

TEST(MinPartition, NoEdges) {
  Hypergraph h(4, {});
  PartitionOracleResult r =
      min_partition(h, EdgeVector(EdgeRole::kPoint, {}), q(1));
  EXPECT_EQ(r.value, q(-3));
  EXPECT_EQ(r.partition, Partition::singletons(4));
}

TEST(MinPartition, H1BetaTwo) {
  PartitionOracleResult r = min_partition(h1(), ones(3), q(2));
  EXPECT_EQ(r.value, q(-3));
  EXPECT_EQ(r.partition, Partition::singletons(4));
}

TEST(MinPartition, RestrictedEdgeSet) {
  // Only e2 = {0,3} counts; singletons and {0,3} | {1} | {2} both give -2.
  EdgeSet f{2};
  PartitionOracleResult r = min_partition(h1(), f, ones(3), q(1));
  EXPECT_EQ(r.value, q(-2));
  EXPECT_EQ(detail::partition_objective(h1(), f, ones(3), q(1), r.partition),
            q(-2));
}

TEST(MinPartition, BetaZeroIsTrivial) {
  PartitionOracleResult r = min_partition(h1(), ones(3), q(0));
  EXPECT_EQ(r.value, q(0));
}

TEST(MinPartition, Errors) {
  EXPECT_HM_ERROR(min_partition(h0(), vec({q(1)}), q(1)),
                  ErrorCode::kInvalidArgument);
  EXPECT_HM_ERROR(min_partition(h0(), vec({q(1), q(1)}), q(-1)),
                  ErrorCode::kInvalidArgument);
  EXPECT_HM_ERROR(min_partition(h0(), vec({q(1), q(-1)}), q(1)),
                  ErrorCode::kNegativeEntry);
}

TEST(MinPartition, GreedyStateIsADualCertificate) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Hypergraph h = random_hypergraph(rng, uniform(rng, 1, 6),
                                     uniform(rng, 0, 8), 1, 4);
    EdgeVector x = random_vector(rng, h.num_edges(), 2, 4);
    Rational beta = random_rational(rng, 3, 2);
    PartitionOracleResult r = min_partition(h, x, beta);
    EXPECT_LE(r.state.cut_solves, h.num_vertices());
    EXPECT_EQ(Partition(h.num_vertices(), r.state.family), r.partition);
    // y is feasible: y(S) >= f(S) for every nonempty S.
    EdgeSet all = h.all_edges();
    for (std::uint32_t mask = 1; mask < (1u << h.num_vertices()); ++mask) {
      VertexSet s;
      Rational y_s;
      for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (mask >> v & 1) {
          s.push_back(v);
          y_s += r.state.y[v];
        }
      EXPECT_GE(y_s, supermodular_f(h, x, beta, r.state.root, s));
    }
    auto eta = r.state.eta();
    EXPECT_EQ(eta[0], r.state.y[0] + beta);
  }
}

TEST(SupermodularF, Definition) {
  Hypergraph h = h1();
  EdgeVector x = vec({q(1), q(2), q(3)});
  EXPECT_EQ(supermodular_f(h, x, q(5), 0, VertexSet{0, 1, 2}), q(1));
  EXPECT_EQ(supermodular_f(h, x, q(5), 0, VertexSet{1, 2, 3}), q(7));
  EXPECT_EQ(supermodular_f(h, x, q(5), 0, VertexSet{0, 3}), q(3));
  EXPECT_HM_ERROR(supermodular_f(h, x, q(5), 0, VertexSet{}),
                  ErrorCode::kInvalidArgument);
}
