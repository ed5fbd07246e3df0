#pragma once

// Rank, independence, maximum-weight hyperforests and separation from the
// hypergraphic matroid polytope P(H) = {x >= 0 : x(S) <= r(S) for S ⊆ E}.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "hypermat/error.hpp"
#include "hypermat/gadgets.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/mincut.hpp"
#include "hypermat/partition_oracle.hpp"
#include "hypermat/rational.hpp"

namespace hypermat {

struct RankResult {
  std::size_t rank = 0;
  /// Partition attaining r(F) = |V| - |P| + |δ_F(P)|.
  Partition witness_partition;
};

/// r(F) = min over partitions P of |V| - |P| + |δ_F(P)|.
inline RankResult rank(const Hypergraph& h, std::span<const EdgeId> f) {
  RankResult out;
  if (h.num_vertices() == 0) return out;
  EdgeVector ones = EdgeVector::constant(EdgeRole::kPoint, h.num_edges(), 1);
  PartitionOracleResult sep = min_partition(h, f, ones, Rational(1));
  Rational r = sep.value + Rational(static_cast<long>(h.num_vertices()) - 1);
  HYPERMAT_CHECK(r.is_integer() && r.sign() >= 0, "rank is not a natural");
  out.rank = r.numerator().get_ui();
  out.witness_partition = std::move(sep.partition);
  return out;
}

inline bool is_independent(const Hypergraph& h, std::span<const EdgeId> f) {
  detail::check_edge_ids(h, f);
  EdgeSet set = detail::normalized(f);
  if (set.empty()) return true;
  for (EdgeId e : set)
    if (h.is_loop(e)) return false;
  if (set.size() + 1 > h.num_vertices()) return false;
  return rank(h, set).rank == set.size();
}

/// Is independent ∪ {candidate} independent? Requires `independent` to be
/// independent. One min cut: the set stays independent iff
/// min |∪F| - |F| over F ∋ candidate is at least 1.
inline bool independence_test_incremental(const Hypergraph& h,
                                          std::span<const EdgeId> independent,
                                          EdgeId candidate) {
  std::vector<EdgeId> edges(independent.begin(), independent.end());
  edges.push_back(candidate);
  GadgetGraph g = build_independence_gadget(h, edges, candidate);
  CutResult cut = min_st_cut(g.network);
  IndependenceCutInterpretation parts = interpret_independence_cut(h, g, cut);
  HYPERMAT_CHECK(
      parts.value == Rational(static_cast<long>(parts.vertices.size())) -
                         Rational(static_cast<long>(parts.edges.size())),
      "independence cut value differs from |∪F| - |F|");
  return parts.value >= Rational(1);
}

struct HyperforestResult {
  EdgeSet edges;
  Rational weight;
};

/// Greedy maximum-weight hyperforest. Edges are scanned by nonincreasing
/// weight (ties by id); the scan stops once a hypertree is reached.
inline HyperforestResult max_weight_hyperforest(const Hypergraph& h,
                                                const EdgeVector& w) {
  w.validate(h.num_edges());
  std::vector<EdgeId> order = h.all_edges();
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return w[b] < w[a]; });

  HyperforestResult out;
  std::vector<EdgeId> chosen;
  const std::size_t target = h.num_vertices() == 0 ? 0 : h.num_vertices() - 1;
  for (EdgeId e : order) {
    if (chosen.size() >= target) break;
    if (h.is_loop(e)) continue;
    if (independence_test_incremental(h, chosen, e)) {
      chosen.push_back(e);
      out.weight += w[e];
    }
  }
  out.edges = detail::normalized(chosen);
  return out;
}

/// A violated inequality  sign * x(edges) <= rhs  found by separation.
struct SeparationOutcome {
  enum class Kind {
    kInPolytope,
    /// x(e) >= 0 violated; lhs = -x(e), rhs = 0.
    kNonnegativity,
    /// x(e) <= r({e}) violated (r = 0 for a loop, 1 otherwise).
    kSingleEdgeRank,
    /// x(E[W]) <= |W| - 1 violated.
    kSubsetRank,
  };

  Kind kind = Kind::kInPolytope;
  /// Edge set S of the inequality (E[W] for kSubsetRank).
  EdgeSet edges;
  /// W for kSubsetRank.
  VertexSet vertices;
  Rational lhs;
  Rational rhs;
  /// Partition form {W} ∪ singletons (kSubsetRank only): the violated
  /// inequality reads x(S) <= |V| - |P| + |δ_S(P)|.
  std::optional<Partition> partition;

  bool in_polytope() const noexcept { return kind == Kind::kInPolytope; }
};

inline SeparationOutcome separate_polytope(const Hypergraph& h,
                                           const EdgeVector& x) {
  if (x.size() != h.num_edges())
    throw Error(ErrorCode::kInvalidArgument, "point has wrong length");
  SeparationOutcome out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (x[e].sign() < 0) {
      out.kind = SeparationOutcome::Kind::kNonnegativity;
      out.edges = {e};
      out.lhs = -x[e];
      out.rhs = 0;
      return out;
    }
    Rational bound = h.is_loop(e) ? Rational(0) : Rational(1);
    if (x[e] > bound) {
      out.kind = SeparationOutcome::Kind::kSingleEdgeRank;
      out.edges = {e};
      out.lhs = x[e];
      out.rhs = bound;
      return out;
    }
  }

  const Rational total = x.sum(h.all_edges());
  std::optional<Rational> best;
  VertexSet best_w;
  for (VertexId vbar = 0; vbar < h.num_vertices(); ++vbar) {
    GadgetGraph g = build_polytope_gadget(h, x, vbar);
    CutResult cut = min_st_cut(g.network);
    Rational value = cut.capacity - total;  // |W| - x(E[W])
    if (!best || value < *best) {
      best = value;
      best_w = interpret_gadget_cut(h, g, cut).sink_vertices;
    }
  }
  if (!best || *best >= Rational(1)) return out;

  out.kind = SeparationOutcome::Kind::kSubsetRank;
  out.vertices = best_w;
  EdgeSet all = h.all_edges();
  out.edges = induced_edges(h, all, best_w);
  out.lhs = x.sum(out.edges);
  out.rhs = Rational(static_cast<long>(best_w.size()) - 1);
  HYPERMAT_CHECK(out.lhs > out.rhs, "reported inequality is not violated");

  std::vector<VertexSet> blocks{best_w};
  std::vector<char> in_w(h.num_vertices(), 0);
  for (VertexId v : best_w) in_w[v] = 1;
  for (VertexId v = 0; v < h.num_vertices(); ++v)
    if (!in_w[v]) blocks.push_back({v});
  out.partition = Partition(h.num_vertices(), std::move(blocks));
  return out;
}

}  // namespace hypermat
