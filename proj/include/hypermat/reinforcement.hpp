#pragma once

// Minimum-cost reinforcement:
//
//   min d·x  s.t.  x(δ(P)) >= k(|P| - 1) for every partition P of V,
//                  0 <= x(e) <= u(e).
//
// Primal-dual algorithm. The dual raises γ_P on the current partition P̄
// until a new edge becomes tight (reduced cost zero); tight edges form H'.
// After adding the tight edge ē to H', the partition problem
// min u(δ_{H'}(P)) - k(|P| - 1) is re-solved. If the optimum keeps P̄, ē is
// set to its bound (Case 1). Otherwise the optimum merges some blocks of P̄
// into one block U and x(ē) completes x(δ(P_I)) to exactly k(|I| - 1)
// (Case 2). The loop ends when the partition optimum is zero.

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

/// Upper bound on x(e); nullopt means unbounded.
using Bound = std::optional<Rational>;

struct RaisedPartition {
  Partition partition;
  Rational gamma;
};

struct DualState {
  /// Every partition whose γ was raised, in order of first raise.
  std::vector<RaisedPartition> gamma;
  std::vector<Rational> beta_e;
  /// Slack of the dual edge constraint: d(e) + β(e) - Σ{γ_P : e ∈ δ(P)}.
  std::vector<Rational> d_reduced;
  /// H': the tight edges, in insertion order.
  std::vector<EdgeId> tight;
  Partition current_partition;
};

struct MergeDescriptor {
  /// Indices (into the old partition's blocks) of the merged blocks.
  std::vector<std::size_t> blocks;
  /// U: union of the merged blocks.
  VertexSet merged;
  Rational lambda;
};

struct CanonicalMerge {
  /// The old partition, possibly with one block group merged into U.
  Partition partition;
  /// Empty for the identity (Case 1).
  std::optional<MergeDescriptor> merge;
};

enum class ReinforcementStatus { kOptimal, kInfeasible };

/// How the partition problem on the tight edges is re-solved each round.
enum class ReinforceOracle {
  /// One min cut on the hypergraph contracted by the current partition,
  /// searching only coarsenings that merge a group spanned by the new edge.
  kContracted,
  /// The general partition oracle on the full vertex set (|V| min cuts).
  kGeneral,
};

struct ReinforceOptions {
  ReinforceOracle oracle = ReinforceOracle::kContracted;
};

struct ReinforcementResult {
  ReinforcementStatus status = ReinforcementStatus::kOptimal;
  EdgeVector x;
  Rational cost;
  DualState dual;
  /// Objective of the dual certificate (equals cost when optimal).
  Rational dual_objective;
  std::size_t iterations = 0;
  /// Infeasible only: a partition with u(δ(P)) < k(|P| - 1).
  std::optional<Partition> infeasibility_witness;
};

namespace detail {

/// u(δ_{tight}(P)) - k(|P| - 1) for a partition or partial family.
inline Rational tight_objective(const Hypergraph& h,
                                std::span<const EdgeId> tight,
                                const EdgeVector& u, const Rational& k,
                                const std::vector<VertexSet>& family) {
  return u.sum(cross_edges(h, tight, family)) -
         k * Rational(static_cast<long>(family.size()) - 1);
}

inline EdgeVector effective_bounds(std::size_t n, std::span<const Bound> u,
                                   const Rational& k) {
  EdgeVector out(EdgeRole::kBound, {});
  out.values.reserve(u.size());
  Rational cap = k * Rational(static_cast<long>(n) - 1);
  for (const Bound& b : u) out.values.push_back(b ? *b : cap);
  return out;
}

}  // namespace detail

/// Rewrites an optimal partition `p_new` of the problem on `tight` (which
/// already contains `e_bar`) into the form "p_old with at most one group of
/// blocks merged into U, where e_bar spans the group". Optimality is
/// preserved by both rewrite rules:
///   1. blocks of p_new cut by an old block are merged;
///   2. merged groups are split back into their old blocks unless e_bar
///      spans the group and the split would strictly increase the objective.
/// x is the current primal vector; lambda = k(|I|-1) - x(δ_H(P_I) ∖ {e_bar}).
inline CanonicalMerge canonicalize_merge(const Hypergraph& h,
                                         std::span<const EdgeId> tight,
                                         const Partition& p_old,
                                         const Partition& p_new, EdgeId e_bar,
                                         const EdgeVector& x,
                                         const EdgeVector& u,
                                         const Rational& k) {
  const std::size_t n = h.num_vertices();
  const auto old_label = p_old.labels(n);
  const auto new_label = p_new.labels(n);

  // Rule 1: union-find over p_new blocks, joined through each old block.
  std::vector<std::size_t> parent(p_new.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const VertexSet& block : p_old.blocks())
    for (VertexId v : block) {
      std::size_t a = find(new_label[block.front()]);
      std::size_t b = find(new_label[v]);
      if (a != b) parent[b] = a;
    }

  // Group old blocks by coarse block.
  std::vector<std::vector<std::size_t>> groups(p_new.size());
  for (std::size_t i = 0; i < p_old.size(); ++i)
    groups[find(new_label[p_old.block(i).front()])].push_back(i);

  std::vector<char> in_e_bar(n, 0);
  for (VertexId v : h.edge(e_bar)) in_e_bar[v] = 1;

  // Rule 2: keep only a group spanned by e_bar with positive split gain.
  std::optional<std::vector<std::size_t>> kept;
  for (const auto& group : groups) {
    if (group.size() < 2) continue;
    std::vector<VertexSet> sub;
    std::vector<char> in_group(n, 0);
    for (std::size_t i : group) {
      sub.push_back(p_old.block(i));
      for (VertexId v : p_old.block(i)) in_group[v] = 1;
    }
    bool spans = true;
    for (VertexId v : h.edge(e_bar)) spans = spans && in_group[v];
    if (!spans) continue;
    if (detail::tight_objective(h, tight, u, k, sub).sign() > 0) {
      HYPERMAT_CHECK(!kept, "two merged groups survive canonicalization");
      kept = group;
    }
  }

  CanonicalMerge out;
  if (!kept) {
    out.partition = p_old;
  } else {
    std::vector<char> merged_block(p_old.size(), 0);
    MergeDescriptor desc;
    desc.blocks = *kept;
    std::vector<VertexSet> blocks;
    std::vector<VertexSet> family;
    for (std::size_t i : *kept) {
      merged_block[i] = 1;
      family.push_back(p_old.block(i));
      desc.merged.insert(desc.merged.end(), p_old.block(i).begin(),
                         p_old.block(i).end());
    }
    std::sort(desc.merged.begin(), desc.merged.end());
    for (std::size_t i = 0; i < p_old.size(); ++i)
      if (!merged_block[i]) blocks.push_back(p_old.block(i));
    blocks.push_back(desc.merged);
    out.partition = Partition(n, std::move(blocks));

    EdgeSet all = h.all_edges();
    Rational crossing;
    for (EdgeId e : cross_edges(h, all, family))
      if (e != e_bar) crossing += x[e];
    desc.lambda = k * Rational(static_cast<long>(kept->size()) - 1) - crossing;
    HYPERMAT_CHECK(desc.lambda.sign() >= 0, "Case 2 value is negative");
    HYPERMAT_CHECK(desc.lambda <= u[e_bar], "Case 2 value exceeds the bound");
    out.merge = std::move(desc);
  }

  HYPERMAT_CHECK(
      detail::tight_objective(h, tight, u, k, out.partition.blocks()) ==
          detail::tight_objective(h, tight, u, k, p_new.blocks()),
      "canonicalization changed the partition objective");
  return out;
}

namespace detail {

struct Coarsening {
  Partition partition;
  /// u(δ_{tight}(partition)) - k(|partition| - 1).
  Rational value;
};

/// Best partition among `current` and the coarsenings {U} ∪ (other blocks)
/// where U is a union of blocks containing every block met by e_bar. With
/// the blocks contracted to vertices this is min k|U| - u(F[U]) over U
/// containing the forced vertices: one edge-split min cut. Ties keep
/// `current`.
inline Coarsening best_coarsening(const Hypergraph& h,
                                  std::span<const EdgeId> tight,
                                  const EdgeVector& u, const Rational& k,
                                  const Partition& current, EdgeId e_bar) {
  const std::size_t n = h.num_vertices();
  const std::size_t blocks = current.size();
  const auto label = current.labels(n);

  std::vector<std::vector<VertexId>> contracted;
  std::vector<Rational> weight;
  for (EdgeId e : tight) {
    std::vector<VertexId> c;
    for (VertexId v : h.edge(e)) c.push_back(label[v]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.size() < 2) continue;
    contracted.push_back(std::move(c));
    weight.push_back(u[e]);
  }
  const Hypergraph hc(blocks, contracted);
  Rational crossing;
  for (const Rational& w : weight) crossing += w;

  Coarsening best{current,
                  crossing - k * Rational(static_cast<long>(blocks) - 1)};

  std::vector<VertexId> forced;
  for (VertexId v : h.edge(e_bar)) forced.push_back(label[v]);
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  HYPERMAT_CHECK(forced.size() >= 2, "new tight edge lies inside a block");

  std::vector<Rational> source_cap(blocks, k);
  EdgeSet all = hc.all_edges();
  GadgetGraph g = build_edge_split(hc, all, weight, source_cap, {},
                                   forced.front(), GadgetKind::kPolytope);
  for (std::size_t i = 1; i < forced.size(); ++i)
    g.network.add_arc(g.vertex_node[forced[i]], g.t, Capacity::infinite());
  CutResult cut = min_st_cut(g.network);
  const VertexSet merged = interpret_gadget_cut(hc, g, cut).sink_vertices;
  for (VertexId b : forced)
    HYPERMAT_CHECK(std::binary_search(merged.begin(), merged.end(), b),
                   "forced block left out of the merged group");

  // cut = k|U| + u(F) - u(F[U]) and the coarsening has N - |U| + 1 blocks,
  // so its objective is cut - kN.
  Rational value = cut.capacity - k * Rational(static_cast<long>(blocks));
  if (value < best.value) {
    std::vector<char> in_u(blocks, 0);
    for (VertexId b : merged) in_u[b] = 1;
    std::vector<std::size_t> coarse(n);
    for (VertexId v = 0; v < n; ++v)
      coarse[v] = in_u[label[v]] ? blocks : label[v];
    best = Coarsening{Partition::from_labels(coarse), value};
    HYPERMAT_CHECK(
        value == tight_objective(h, tight, u, k, best.partition.blocks()),
        "contracted cut value differs from the partition objective");
  }
  return best;
}

/// Every partition {T_1..T_q} of U has x(δ(T_1..T_q)) >= k(q - 1), where
/// only edges inside U count. Solved as a partition problem on H[U].
inline bool merged_block_is_connected(const Hypergraph& h, const VertexSet& u,
                                      const EdgeVector& x, const Rational& k) {
  constexpr std::size_t kOut = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(h.num_vertices(), kOut);
  for (std::size_t i = 0; i < u.size(); ++i) pos[u[i]] = i;
  std::vector<std::vector<VertexId>> edges;
  EdgeVector xs(EdgeRole::kPoint, {});
  for (EdgeId e : induced_edges(h, h.all_edges(), u)) {
    std::vector<VertexId> mapped;
    for (VertexId v : h.edge(e)) mapped.push_back(pos[v]);
    edges.push_back(std::move(mapped));
    xs.values.push_back(x[e]);
  }
  return min_partition(Hypergraph(u.size(), std::move(edges)), xs, k)
             .value.sign() == 0;
}

inline void check_dual(const Hypergraph& h, const EdgeVector& d,
                       const DualState& dual) {
  const EdgeSet all = h.all_edges();
  std::vector<Rational> raised(h.num_edges());
  for (const auto& [p, g] : dual.gamma) {
    HYPERMAT_CHECK(g.sign() >= 0, "negative gamma");
    for (EdgeId e : cross_edges(h, all, p)) raised[e] += g;
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    HYPERMAT_CHECK(dual.beta_e[e].sign() >= 0, "negative beta");
    HYPERMAT_CHECK(dual.d_reduced[e].sign() >= 0, "dual edge constraint");
    HYPERMAT_CHECK(dual.d_reduced[e] == d[e] + dual.beta_e[e] - raised[e],
                   "reduced cost out of sync with gamma");
  }
}

}  // namespace detail

inline ReinforcementResult reinforce(const Hypergraph& h, long k_value,
                                     const EdgeVector& d,
                                     std::span<const Bound> u_bounds,
                                     const ReinforceOptions& options = {}) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  if (k_value < 0)
    throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
  d.validate(m);
  if (u_bounds.size() != m)
    throw Error(ErrorCode::kInvalidArgument, "bound vector has wrong length");
  for (std::size_t e = 0; e < m; ++e)
    if (u_bounds[e] && u_bounds[e]->sign() < 0)
      throw Error(ErrorCode::kNegativeEntry, "u(" + std::to_string(e) + ")");

  const Rational k(k_value);
  const EdgeVector u = detail::effective_bounds(n, u_bounds, k);
  const EdgeSet all = h.all_edges();

  ReinforcementResult out;
  out.x = EdgeVector::constant(EdgeRole::kPoint, m, 0);
  DualState& dual = out.dual;
  dual.beta_e.assign(m, Rational(0));
  dual.d_reduced = d.values;
  dual.current_partition = Partition::singletons(n);
  if (k_value == 0 || n <= 1) {
    dual.current_partition = Partition::whole(n);
    return out;
  }

  std::vector<char> is_tight(m, 0);
  Partition& current = dual.current_partition;
  while (true) {
    // Step 1: raise γ on the current partition.
    EdgeSet crossing = cross_edges(h, all, current);
    std::optional<EdgeId> e_bar;
    for (EdgeId e : crossing)
      if (!is_tight[e] &&
          (!e_bar || dual.d_reduced[e] < dual.d_reduced[*e_bar]))
        e_bar = e;
    if (!e_bar) {
      out.status = ReinforcementStatus::kInfeasible;
      HYPERMAT_CHECK(
          u.sum(crossing) < k * Rational(static_cast<long>(current.size()) - 1),
          "no candidate edge but the partition is satisfiable");
      out.infeasibility_witness = current;
      break;
    }
    const Rational eps = dual.d_reduced[*e_bar];
    if (eps.sign() > 0) {
      for (EdgeId e : crossing) {
        if (is_tight[e]) {
          dual.beta_e[e] += eps;
        } else {
          dual.d_reduced[e] -= eps;
          HYPERMAT_CHECK(dual.d_reduced[e].sign() >= 0,
                         "step size broke dual feasibility");
        }
      }
      auto it = std::find_if(dual.gamma.begin(), dual.gamma.end(),
                             [&](const RaisedPartition& r) {
                               return r.partition == current;
                             });
      if (it == dual.gamma.end())
        dual.gamma.push_back({current, eps});
      else
        it->gamma += eps;
    }

    // Step 2: ē joins H' and the partition problem is re-solved.
    is_tight[*e_bar] = 1;
    dual.tight.push_back(*e_bar);
    ++out.iterations;
    HYPERMAT_CHECK(out.iterations <= m, "more than |E| iterations");
    Partition p_new;
    bool violated = false;
    if (options.oracle == ReinforceOracle::kGeneral) {
      PartitionOracleResult sol = min_partition(h, dual.tight, u, k);
      p_new = std::move(sol.partition);
      violated = sol.violated;
    } else {
      detail::Coarsening step =
          detail::best_coarsening(h, dual.tight, u, k, current, *e_bar);
      p_new = std::move(step.partition);
      violated = step.value.sign() < 0;
    }

    // Step 3: Case 1 keeps P̄, Case 2 merges one group of blocks.
    CanonicalMerge cm = canonicalize_merge(h, dual.tight, current, p_new,
                                           *e_bar, out.x, u, k);
    if (!cm.merge) {
      out.x[*e_bar] = u[*e_bar];
    } else {
      out.x[*e_bar] = cm.merge->lambda;
      HYPERMAT_CHECK(
          out.x.sum(induced_edges(h, all, cm.merge->merged)) ==
              k * Rational(static_cast<long>(cm.merge->merged.size()) - 1),
          "merged block does not carry k(|U|-1)");
      if (cm.merge->merged.size() <= 7)
        HYPERMAT_CHECK(detail::merged_block_is_connected(
                           h, cm.merge->merged, out.x, k),
                       "a partition of the merged block is violated");
    }
    current = std::move(cm.partition);

    const auto label = current.labels(n);
    for (EdgeId e : crossing) {
      if (!(out.x[e].sign() > 0 && out.x[e] < u[e])) continue;
      for (VertexId v : h.edge(e))
        HYPERMAT_CHECK(label[v] == label[h.edge(e).front()],
                       "fractional edge crosses the partition");
    }
    if (!violated) break;
  }

  out.cost = Rational(0);
  for (EdgeId e = 0; e < m; ++e) out.cost += d[e] * out.x[e];
  for (const auto& [p, g] : dual.gamma)
    out.dual_objective += g * k * Rational(static_cast<long>(p.size()) - 1);
  for (EdgeId e = 0; e < m; ++e) out.dual_objective -= u[e] * dual.beta_e[e];
  detail::check_dual(h, d, dual);

  if (out.status == ReinforcementStatus::kOptimal) {
    HYPERMAT_CHECK(out.x.sum(all) ==
                       k * Rational(static_cast<long>(n) - 1),
                   "x(E) differs from k(|V|-1)");
    HYPERMAT_CHECK(min_partition(h, all, out.x, k).value.sign() == 0,
                   "x violates a partition inequality");
    HYPERMAT_CHECK(out.cost == out.dual_objective,
                   "primal and dual objectives differ");
    for (EdgeId e = 0; e < m; ++e) {
      HYPERMAT_CHECK(!(dual.beta_e[e].sign() > 0) || out.x[e] == u[e],
                     "beta > 0 on an edge below its bound");
      HYPERMAT_CHECK(!(out.x[e].sign() > 0) || dual.d_reduced[e].is_zero(),
                     "x > 0 on an edge with positive reduced cost");
    }
    for (const auto& [p, g] : dual.gamma)
      HYPERMAT_CHECK(!(g.sign() > 0) ||
                         out.x.sum(cross_edges(h, all, p)) ==
                             k * Rational(static_cast<long>(p.size()) - 1),
                     "gamma > 0 on a partition that is not tight");
  }
  return out;
}

inline ReinforcementResult reinforce(const Hypergraph& h, long k,
                                     const EdgeVector& d, const EdgeVector& u,
                                     const ReinforceOptions& options = {}) {
  std::vector<Bound> bounds(u.values.begin(), u.values.end());
  return reinforce(h, k, d, bounds, options);
}

}  // namespace hypermat
