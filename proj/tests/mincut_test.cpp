#include <gtest/gtest.h>

#include <optional>

#include "test_util.hpp"

using namespace hypermat;
using namespace hypermat::testing;

namespace {

// Node ids: s = 0, t = 1, a = 2.
FlowNetwork path(Capacity sa, Capacity at) {
  FlowNetwork net(3, 0, 1);
  net.add_arc(0, 2, std::move(sa));
  net.add_arc(2, 1, std::move(at));
  return net;
}

struct BruteCut {
  Rational capacity;
  std::vector<char> minimal_side;
};

// Enumerates every s-t cut; the minimal minimum cut is the intersection of
// all minimum source sides.
std::optional<BruteCut> brute_min_cut(const FlowNetwork& net) {
  const std::size_t n = net.num_nodes();
  std::optional<BruteCut> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> net.source() & 1) || (mask >> net.sink() & 1)) continue;
    std::vector<char> side(n);
    for (std::size_t v = 0; v < n; ++v) side[v] = mask >> v & 1;
    auto cap = cut_capacity(net, side);
    if (!cap) continue;
    if (!best || *cap < best->capacity) {
      best = BruteCut{*cap, side};
    } else if (*cap == best->capacity) {
      for (std::size_t v = 0; v < n; ++v)
        best->minimal_side[v] = best->minimal_side[v] && side[v];
    }
  }
  return best;
}

FlowNetwork random_network(Rng& rng, std::size_t nodes, std::size_t arcs,
                           long hi, long den, double inf_prob) {
  FlowNetwork net(nodes, 0, 1);
  std::bernoulli_distribution inf(inf_prob);
  for (std::size_t i = 0; i < arcs; ++i) {
    std::size_t a = uniform(rng, 0, nodes - 1), b = uniform(rng, 0, nodes - 1);
    if (a == b) continue;
    net.add_arc(a, b,
                inf(rng) ? Capacity::infinite()
                         : Capacity(random_rational(rng, hi, den)));
  }
  return net;
}

}  // namespace

TEST(MinCut, Bottleneck) {
  CutResult r = min_st_cut(path(1, 2));
  EXPECT_EQ(r.capacity, q(1));
  EXPECT_EQ(r.source_side, (std::vector<std::size_t>{0}));

  r = min_st_cut(path(3, 2));
  EXPECT_EQ(r.capacity, q(2));
  EXPECT_EQ(r.source_side, (std::vector<std::size_t>{0, 2}));
}

TEST(MinCut, InfinitePathHasNoFiniteCut) {
  EXPECT_HM_ERROR(min_st_cut(path(Capacity::infinite(), Capacity::infinite())),
                  ErrorCode::kNoFiniteCut);
}

TEST(MinCut, InfiniteArcsRespected) {
  CutResult r = min_st_cut(path(Capacity::infinite(), q(5, 2)));
  EXPECT_EQ(r.capacity, q(5, 2));
  EXPECT_EQ(r.source_side, (std::vector<std::size_t>{0, 2}));
}

TEST(MinCut, ZeroCapacityGivesMinimalSide) {
  CutResult r = min_st_cut(path(0, 0));
  EXPECT_EQ(r.capacity, q(0));
  EXPECT_EQ(r.source_side, (std::vector<std::size_t>{0}));
}

TEST(MinCut, RejectsBadArcs) {
  FlowNetwork net(3, 0, 1);
  EXPECT_HM_ERROR(net.add_arc(0, 3, 1), ErrorCode::kInvalidArgument);
  EXPECT_HM_ERROR(net.add_arc(0, 2, q(-1)), ErrorCode::kNegativeEntry);
  EXPECT_HM_ERROR(FlowNetwork(2, 0, 0), ErrorCode::kInvalidArgument);
}

TEST(MinCut, HugeCapacitiesUseBigIntegers) {
  Rational big(mpz_class("1000000000000000000000000"));
  FlowNetwork net(4, 0, 1);
  net.add_arc(0, 2, big);
  net.add_arc(0, 3, big + q(1, 3));
  net.add_arc(2, 1, big * q(2));
  net.add_arc(3, 1, q(1, 7));
  CutResult r = min_st_cut(net);
  EXPECT_EQ(r.capacity, big + q(1, 7));
}

TEST(MinCut, MatchesExhaustiveEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    FlowNetwork net = random_network(rng, uniform(rng, 2, 8),
                                     uniform(rng, 0, 20), 4, 3, 0.15);
    auto expected = brute_min_cut(net);
    if (!expected) {
      EXPECT_HM_ERROR(min_st_cut(net), ErrorCode::kNoFiniteCut);
      continue;
    }
    CutResult got = min_st_cut(net);
    EXPECT_EQ(got.capacity, expected->capacity);
    std::vector<char> side(net.num_nodes());
    for (std::size_t v = 0; v < net.num_nodes(); ++v) side[v] = got.contains(v);
    EXPECT_EQ(side, expected->minimal_side) << "trial " << trial;
  }
}

TEST(MinCutSequence, IdenticalUpdateIsIdempotent) {
  FlowNetwork net = path(1, 2);
  auto out = min_st_cut_sequence(net, {{{0, Capacity(1)}}});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(*out[0].cut, *out[1].cut);
}

TEST(MinCutSequence, CumulativeUpdates) {
  FlowNetwork net = path(1, 2);
  auto out = min_st_cut_sequence(
      net, {{{0, Capacity(3)}}, {{1, Capacity(q(1, 2))}}, {{1, Capacity::infinite()}, {0, Capacity::infinite()}}},
      SequenceMonotonicity::kSourceNondecreasingSinkNonincreasing);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0].cut->capacity, q(1));
  EXPECT_EQ(out[1].cut->capacity, q(2));
  EXPECT_EQ(out[2].cut->capacity, q(1, 2));
  EXPECT_FALSE(out[3].cut);
  EXPECT_EQ(out[3].error, ErrorCode::kNoFiniteCut);
}

TEST(MinCutSequence, RejectsInnerArcUpdates) {
  FlowNetwork net(4, 0, 1);
  net.add_arc(0, 2, 1);
  net.add_arc(2, 3, 1);
  net.add_arc(3, 1, 1);
  EXPECT_HM_ERROR(min_st_cut_sequence(net, {{{1, Capacity(2)}}}),
                  ErrorCode::kInvalidArgument);
}

TEST(MinCutSequence, MatchesIndependentSolves) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    FlowNetwork net = random_network(rng, 7, 18, 5, 2, 0.05);
    std::vector<std::vector<CapacityUpdate>> updates;
    FlowNetwork replay = net;
    std::vector<FlowNetwork> states{replay};
    for (int step = 0; step < 4; ++step) {
      std::vector<CapacityUpdate> batch;
      for (std::size_t a = 0; a < net.num_arcs(); ++a) {
        const Arc& arc = net.arc(a);
        if (arc.tail == 0 || arc.head == 1) {
          batch.push_back({a, Capacity(random_rational(rng, 5, 2))});
          replay.set_capacity(a, batch.back().capacity);
        }
      }
      updates.push_back(batch);
      states.push_back(replay);
    }
    auto out = min_st_cut_sequence(net, updates);
    ASSERT_EQ(out.size(), states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto expected = brute_min_cut(states[i]);
      if (!expected) {
        EXPECT_EQ(out[i].error, ErrorCode::kNoFiniteCut);
      } else {
        ASSERT_TRUE(out[i].cut);
        EXPECT_EQ(out[i].cut->capacity, expected->capacity);
      }
    }
  }
}
