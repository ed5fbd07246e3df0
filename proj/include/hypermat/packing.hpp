#pragma once

// Newton (Dinkelbach) iterations for two ratio problems:
//
//   strength   σ = min over partitions P, |P| >= 2, of c(δ(P)) / (|P| - 1)
//   arboricity ρ = max over X ⊆ V, |X| >= 2, of |E[X]| / (|X| - 1)
//
// ⌊σ⌋ is the number of capacity-disjoint hypertrees; ⌈ρ⌉ is the minimum
// number of hyperforests partitioning E. Both loops run in exact rationals and
// stop when the parametric optimum is exactly zero.

#include <optional>
#include <vector>

#include "hypermat/error.hpp"
#include "hypermat/gadgets.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/mincut.hpp"
#include "hypermat/partition_oracle.hpp"
#include "hypermat/rational.hpp"

namespace hypermat {

struct StrengthResult {
  Rational sigma;
  /// Partition with >= 2 blocks attaining sigma.
  Partition critical_partition;
  mpz_class integer_packing;
  /// Number of parametric (oracle) solves.
  std::size_t iterations = 0;
  /// β after each iteration, starting with the all-singletons ratio.
  std::vector<Rational> beta_trace;
};

inline StrengthResult strength(const Hypergraph& h, const EdgeVector& c) {
  const std::size_t n = h.num_vertices();
  if (n < 2)
    throw Error(ErrorCode::kInvalidArgument, "strength needs |V| >= 2");
  c.validate(h.num_edges());
  const EdgeSet all = h.all_edges();

  auto ratio = [&](const Partition& p) {
    return c.sum(cross_edges(h, all, p)) /
           Rational(static_cast<long>(p.size()) - 1);
  };

  StrengthResult out;
  Partition current = Partition::singletons(n);
  Rational beta = ratio(current);
  out.beta_trace.push_back(beta);
  while (true) {
    PartitionOracleResult step = min_partition(h, all, c, beta);
    ++out.iterations;
    HYPERMAT_CHECK(out.iterations <= n, "Newton exceeded |V| iterations");
    if (!step.violated) break;
    HYPERMAT_CHECK(step.partition.size() >= 2, "violated partition is {V}");
    Rational next = ratio(step.partition);
    HYPERMAT_CHECK(next < beta, "Newton sequence not strictly decreasing");
    beta = next;
    current = std::move(step.partition);
    out.beta_trace.push_back(beta);
  }
  out.sigma = beta;
  out.critical_partition = std::move(current);
  out.integer_packing = out.sigma.floor();
  return out;
}

struct ArboricityResult {
  Rational rho;
  mpz_class k;
  /// X with |X| >= 2 attaining rho (empty when E is empty).
  VertexSet witness;
  std::size_t iterations = 0;
  std::vector<Rational> beta_trace;
};

struct DensestStep {
  Rational value;
  VertexSet set;
};

/// One Newton step: the X maximizing |E[X]| - β(|X| - 1). Solves the
/// arboricity gadget once per forced vertex and keeps the best sink side.
inline DensestStep densest_step(const Hypergraph& h, const Rational& beta) {
  const Rational m(static_cast<long>(h.num_edges()));
  DensestStep best{Rational(0), {}};
  bool found = false;
  for (VertexId vbar = 0; vbar < h.num_vertices(); ++vbar) {
    GadgetGraph g = build_arboricity_gadget(h, beta, vbar);
    CutResult cut = min_st_cut(g.network);
    // cut - |E| = β|W| - |E[W]|, so |E[W]| - β(|W|-1) = β - (cut - |E|).
    Rational value = beta - (cut.capacity - m);
    if (!found || value > best.value) {
      found = true;
      best.value = value;
      best.set = interpret_gadget_cut(h, g, cut).sink_vertices;
    }
  }
  return best;
}

inline ArboricityResult arboricity(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (h.is_loop(e))
      throw Error(ErrorCode::kLoopPresent,
                  "edge " + std::to_string(e) +
                      " has one vertex and lies in no hyperforest");
  ArboricityResult out;
  if (h.num_edges() == 0) return out;  // ρ = 0, k = 0

  const EdgeSet all = h.all_edges();
  auto density = [&](const VertexSet& x) {
    return Rational(static_cast<long>(induced_edges(h, all, x).size())) /
           Rational(static_cast<long>(x.size()) - 1);
  };

  VertexSet current = h.all_vertices();
  Rational beta = density(current);
  out.beta_trace.push_back(beta);
  while (true) {
    DensestStep step = densest_step(h, beta);
    ++out.iterations;
    HYPERMAT_CHECK(out.iterations <= n, "Newton exceeded |V| iterations");
    HYPERMAT_CHECK(step.value.sign() >= 0, "densest step below zero");
    if (step.value.sign() == 0) break;
    HYPERMAT_CHECK(step.set.size() >= 2, "positive step on a single vertex");
    Rational next = density(step.set);
    HYPERMAT_CHECK(next > beta, "Newton sequence not strictly increasing");
    beta = next;
    current = std::move(step.set);
    out.beta_trace.push_back(beta);
  }
  out.rho = beta;
  out.k = out.rho.ceil();
  out.witness = std::move(current);
  return out;
}

}  // namespace hypermat
