#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"

using namespace hypermat;
using namespace hypermat::testing;

TEST(BruteEnumeration, BellNumbers) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 0; n < 9; ++n) {
    auto parts = brute::enum_partitions(n);
    EXPECT_EQ(parts.size(), bell[n]) << "n = " << n;
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& p : parts) distinct.insert(p.labels(n));
    EXPECT_EQ(distinct.size(), bell[n]);
  }
}

TEST(BruteEnumeration, EarlyStopAndGuard) {
  std::size_t seen = 0;
  brute::for_each_partition(5, [&](const auto&, std::size_t) {
    return ++seen < 3;
  });
  EXPECT_EQ(seen, 3u);
  EXPECT_HM_ERROR(brute::enum_partitions(13), ErrorCode::kSizeGuard);
}

TEST(BruteHyperforest, Examples) {
  EXPECT_TRUE(brute::is_hyperforest(h0(), EdgeSet{0, 1}));
  Hypergraph three(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  EXPECT_FALSE(brute::is_hyperforest(three, three.all_edges()));
  EXPECT_TRUE(brute::is_hyperforest(three, EdgeSet{}));
  EXPECT_FALSE(brute::is_hyperforest(Hypergraph(2, {{0}}), EdgeSet{0}));
}

TEST(BruteMatroid, Rank) {
  EXPECT_EQ(brute::rank(h1(), EdgeSet{0, 1, 2}), 3u);
  EXPECT_EQ(brute::rank(h0(), EdgeSet{0, 1}), 2u);
  brute::Matroid k4(complete_graph(4));
  EXPECT_EQ(k4.rank(EdgeSet{0, 1, 2, 3, 4, 5}), 3u);
  EXPECT_EQ(k4.rank(EdgeSet{0, 1, 3}), 2u);  // triangle {0,1,2}
  EXPECT_FALSE(k4.independent(EdgeSet{0, 1, 3}));
}

TEST(BrutePartition, Minimum) {
  auto r = brute::min_partition(h0(), EdgeSet{0, 1}, vec({q(1), q(1, 2)}), q(1));
  EXPECT_EQ(r.value, q(-1, 2));
  EXPECT_EQ(r.partition, Partition::singletons(3));
}

TEST(BrutePolytope, Examples) {
  EXPECT_TRUE(brute::check_polytope(h0(), vec({q(1), q(1)})).in_polytope());
  auto out = brute::check_polytope(Hypergraph(2, {{0, 1}, {0, 1}}),
                                   vec({q(1), q(1)}));
  EXPECT_FALSE(out.in_polytope());
  EXPECT_EQ(out.slack, q(-1));
  EXPECT_EQ(out.most_violated, (EdgeSet{0, 1}));
}

TEST(BrutePacking, StrengthAndArboricity) {
  EXPECT_EQ(brute::strength(complete_graph(3), ones(3)), q(3, 2));
  EXPECT_EQ(brute::strength(complete_graph(4), ones(6)), q(2));
  EXPECT_EQ(brute::strength(h0(), ones(2)), q(1));
  EXPECT_EQ(brute::arboricity(complete_graph(3)), q(3, 2));
  EXPECT_EQ(brute::arboricity(h0()), q(1));
  EXPECT_EQ(brute::arboricity(Hypergraph(3, {{0, 1, 2}})), q(1, 2));
  EXPECT_EQ(brute::min_forest_cover(complete_graph(4)), 2u);
  EXPECT_EQ(brute::min_forest_cover(complete_graph(3)), 2u);
  EXPECT_EQ(brute::min_forest_cover(h0()), 1u);
}

TEST(BruteReinforce, Examples) {
  auto r = brute::min_cost_integer_reinforcement(
      h0(), 1, vec({q(1), q(2)}), vec({q(2), q(2)}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->cost, q(2));
  EXPECT_EQ(r->x.values, (std::vector<Rational>{q(2), q(0)}));
  EXPECT_FALSE(brute::min_cost_integer_reinforcement(
      h0(), 1, vec({q(1), q(1)}), vec({q(1), q(0)})));
  r = brute::min_cost_integer_reinforcement(complete_graph(3), 1,
                                            vec({q(1), q(2), q(3)}), ones(3));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->cost, q(3));
}
