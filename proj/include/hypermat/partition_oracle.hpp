#pragma once

// Separation of partition inequalities:
//
//   minimize  x̄(δ_F(P)) - β(|P| - 1)  over all partitions P of V.
//
// Solved through the LP min y(V) s.t. y(S) >= f(S) for nonempty S, where
// f(S) = β + x̄(F[S]) if the root r is outside S and x̄(F[S]) otherwise. f is
// intersecting supermodular, so Edmonds' greedy applies: every step lowers
// y(v̄) for an uncovered v̄ until some set through v̄ is tight, and tight sets
// are uncrossed into a disjoint family. The final family is a partition P with
// y(V) = Σ f(S), and the optimum of the partition problem is x̄(F) - y(V).

#include <span>
#include <vector>

#include "hypermat/error.hpp"
#include "hypermat/gadgets.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/mincut.hpp"
#include "hypermat/rational.hpp"

namespace hypermat {

struct GreedyState {
  std::vector<Rational> y;
  /// Pairwise disjoint tight sets.
  std::vector<VertexSet> family;
  VertexId root = 0;
  Rational beta;
  /// Decrement applied in the most recent step.
  Rational alpha;
  std::size_t cut_solves = 0;

  /// η(v) = y(v), plus β at the root.
  std::vector<Rational> eta() const {
    std::vector<Rational> e = y;
    if (!e.empty()) e[root] += beta;
    return e;
  }
};

struct PartitionOracleResult {
  /// Minimum of x̄(δ_F(P)) - β(|P|-1); never positive.
  Rational value;
  Partition partition;
  bool violated = false;
  GreedyState state;
};

namespace detail {

inline Rational induced_weight(const Hypergraph& h, std::span<const EdgeId> f,
                               const EdgeVector& x,
                               const std::vector<char>& in_set) {
  Rational total;
  for (EdgeId e : f) {
    bool inside = true;
    for (VertexId v : h.edge(e))
      if (!in_set[v]) {
        inside = false;
        break;
      }
    if (inside) total += x[e];
  }
  return total;
}

inline Rational partition_objective(const Hypergraph& h,
                                    std::span<const EdgeId> f,
                                    const EdgeVector& x, const Rational& beta,
                                    const Partition& p) {
  EdgeSet crossing = cross_edges(h, f, p);
  return x.sum(crossing) -
         beta * Rational(static_cast<long>(p.size()) - 1);
}

}  // namespace detail

/// f(S) for the partition oracle, restricted to the edges in `f_edges`.
inline Rational supermodular_f(const Hypergraph& h,
                               std::span<const EdgeId> f_edges,
                               const EdgeVector& x, const Rational& beta,
                               VertexId root, std::span<const VertexId> s) {
  if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "f of empty set");
  detail::check_edge_ids(h, f_edges);
  auto mask = detail::vertex_mask(h, s);
  Rational inside = detail::induced_weight(h, detail::normalized(f_edges), x,
                                           mask);
  return mask.at(root) ? inside : beta + inside;
}

inline Rational supermodular_f(const Hypergraph& h, const EdgeVector& x,
                               const Rational& beta, VertexId root,
                               std::span<const VertexId> s) {
  EdgeSet all = h.all_edges();
  return supermodular_f(h, all, x, beta, root, s);
}

/// Exact minimum of x̄(δ_F(P)) - β(|P|-1) over partitions of V, with a
/// minimizing partition. Uses at most |V| minimum cut computations. The root
/// is vertex 0 and each step processes the smallest uncovered vertex.
inline PartitionOracleResult min_partition(const Hypergraph& h,
                                           std::span<const EdgeId> f_edges,
                                           const EdgeVector& x,
                                           const Rational& beta) {
  const std::size_t n = h.num_vertices();
  if (x.size() != h.num_edges())
    throw Error(ErrorCode::kInvalidArgument, "x has wrong length");
  if (beta.sign() < 0)
    throw Error(ErrorCode::kInvalidArgument, "beta must be nonnegative");
  detail::check_edge_ids(h, f_edges);
  const EdgeSet f = detail::normalized(f_edges);
  for (EdgeId e : f)
    if (x[e].sign() < 0)
      throw Error(ErrorCode::kNegativeEntry,
                  "x(" + std::to_string(e) + ") = " + x[e].str());

  PartitionOracleResult result;
  if (n == 0) {
    result.partition = Partition(0, {});
    return result;
  }

  GreedyState& st = result.state;
  st.root = 0;
  st.beta = beta;
  const Rational total = x.sum(f);
  st.y.assign(n, beta + total);

  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  // owner[v]: index into st.family of the set covering v, or kFree.
  std::vector<std::size_t> owner(n, kFree);
  std::vector<char> mask(n, 0);

  for (VertexId vbar = 0; vbar < n; ++vbar) {
    if (owner[vbar] != kFree) continue;

    std::vector<Rational> eta = st.eta();
    Rational eta_neg;
    for (const Rational& e : eta)
      if (e.sign() < 0) eta_neg += e;

    GadgetGraph g = build_supermodular_gadget(h, f, x, eta, vbar);
    CutResult cut = min_st_cut(g.network);
    ++st.cut_solves;
    GadgetCutInterpretation parts = interpret_gadget_cut(h, g, cut);
    const VertexSet& w = parts.sink_vertices;

    st.alpha = cut.capacity - beta - total + eta_neg;

    std::fill(mask.begin(), mask.end(), 0);
    Rational y_w;
    for (VertexId v : w) {
      mask[v] = 1;
      y_w += st.y[v];
    }
    Rational f_w = detail::induced_weight(h, f, x, mask);
    if (!mask[st.root]) f_w += beta;
    HYPERMAT_CHECK(st.alpha == y_w - f_w, "cut value differs from y(W)-f(W)");
    HYPERMAT_CHECK(st.alpha.sign() >= 0, "greedy produced an infeasible y");
    st.y[vbar] -= st.alpha;

    // Uncross: W absorbs every family member it meets.
    VertexSet merged = w;
    std::vector<char> absorbed(st.family.size(), 0);
    for (VertexId v : w)
      if (owner[v] != kFree) absorbed[owner[v]] = 1;
    std::vector<VertexSet> next_family;
    for (std::size_t i = 0; i < st.family.size(); ++i) {
      if (absorbed[i])
        merged.insert(merged.end(), st.family[i].begin(), st.family[i].end());
      else
        next_family.push_back(std::move(st.family[i]));
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    std::fill(mask.begin(), mask.end(), 0);
    Rational y_merged;
    for (VertexId v : merged) {
      mask[v] = 1;
      y_merged += st.y[v];
    }
    Rational f_merged = detail::induced_weight(h, f, x, mask);
    if (!mask[st.root]) f_merged += beta;
    HYPERMAT_CHECK(y_merged == f_merged, "uncrossed set is not tight");

    next_family.push_back(std::move(merged));
    st.family = std::move(next_family);
    for (std::size_t i = 0; i < st.family.size(); ++i)
      for (VertexId v : st.family[i]) owner[v] = i;
  }
  HYPERMAT_CHECK(st.cut_solves <= n, "greedy exceeded |V| steps");

  result.partition = Partition(n, st.family);
  Rational y_total;
  for (const Rational& v : st.y) y_total += v;
  result.value = total - y_total;

  Rational f_family;
  for (const VertexSet& s : st.family) {
    std::fill(mask.begin(), mask.end(), 0);
    for (VertexId v : s) mask[v] = 1;
    f_family += detail::induced_weight(h, f, x, mask);
    if (!mask[st.root]) f_family += beta;
  }
  HYPERMAT_CHECK(f_family == y_total, "final family is not a dual certificate");

  HYPERMAT_CHECK(result.value ==
                     detail::partition_objective(h, f, x, beta,
                                                 result.partition),
                 "oracle value differs from the partition objective");
  HYPERMAT_CHECK(result.value.sign() <= 0, "oracle value is positive");
  result.violated = result.value.sign() < 0;
  return result;
}

inline PartitionOracleResult min_partition(const Hypergraph& h,
                                           const EdgeVector& x,
                                           const Rational& beta) {
  EdgeSet all = h.all_edges();
  return min_partition(h, all, x, beta);
}

}  // namespace hypermat
