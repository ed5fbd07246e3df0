#pragma once

// Auxiliary networks whose minimum cuts solve the set-function minimizations
// behind separation, independence, partition inequalities and arboricity.
//
// The polytope, supermodular and arboricity networks share one layout:
//   node 0 = s, node 1 = t, nodes 2..n+1 = vertices, then a pair (e', e'')
//   per hyperedge. Each hyperedge e with weight w contributes
//   (e',e'') = w/2, (e',t) = w/2, (e'',t) = w/2 and infinite arcs (u,e'),
//   (e'',u) for u in e. An infinite arc (v̄,t) pins the forced vertex v̄ to
//   the sink side. With W the vertex set on the sink side, a finite cut costs
//   w(F) - w(F[W]) on the edge part, so the sink side W minimizes
//   [vertex terms of W] - w(F[W]) subject to v̄ ∈ W.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermat/error.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/mincut.hpp"
#include "hypermat/rational.hpp"

namespace hypermat {

enum class GadgetKind { kPolytope, kSupermodular, kArboricity, kIndependence };

inline constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);

struct GadgetGraph {
  GadgetKind kind = GadgetKind::kPolytope;
  FlowNetwork network;
  std::size_t s = 0;
  std::size_t t = 1;
  /// Node of each hypergraph vertex (kNoNode when absent).
  std::vector<std::size_t> vertex_node;
  /// Hyperedges represented in the network, in node order.
  EdgeSet edges;
  /// Edge-split gadgets: e' and e'' nodes per entry of `edges`.
  /// Independence gadget: edge_in holds the single node per edge.
  std::vector<std::size_t> edge_in;
  std::vector<std::size_t> edge_out;
  /// Vertex pinned to the sink side (edge-split gadgets only).
  std::optional<VertexId> forced_vertex;
  /// Edge-split gadgets: per-edge weight used for the edge arcs.
  std::vector<Rational> edge_weight;
};

struct GadgetCutInterpretation {
  /// T': vertices on the source side.
  VertexSet source_vertices;
  /// W = T̄': vertices on the sink side; contains the forced vertex.
  VertexSet sink_vertices;
  /// e' source side, e'' sink side.
  EdgeSet e1;
  /// e', e'' both on the source side.
  EdgeSet e2;
  /// e', e'' both on the sink side; these are exactly the edges inside W.
  EdgeSet e3;
};

namespace detail {

/// Shared builder for the three edge-split networks.
inline GadgetGraph build_edge_split(const Hypergraph& h,
                                    std::span<const EdgeId> edges,
                                    std::span<const Rational> edge_weight,
                                    std::span<const Rational> source_cap,
                                    std::span<const Rational> sink_cap,
                                    VertexId forced, GadgetKind kind) {
  const std::size_t n = h.num_vertices();
  if (forced >= n)
    throw Error(ErrorCode::kVertexOutOfRange,
                "forced vertex " + std::to_string(forced));
  GadgetGraph g;
  g.kind = kind;
  g.edges.assign(edges.begin(), edges.end());
  g.edge_weight.assign(edge_weight.begin(), edge_weight.end());
  g.forced_vertex = forced;
  g.network = FlowNetwork(2 + n + 2 * edges.size(), 0, 1);
  g.vertex_node.resize(n);
  for (VertexId v = 0; v < n; ++v) g.vertex_node[v] = 2 + v;

  for (VertexId v = 0; v < n; ++v) {
    g.network.add_arc(g.s, g.vertex_node[v], source_cap[v]);
    if (!sink_cap.empty()) g.network.add_arc(g.vertex_node[v], g.t, sink_cap[v]);
  }
  const Rational half(1, 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t in = 2 + n + 2 * i;
    std::size_t out = in + 1;
    g.edge_in.push_back(in);
    g.edge_out.push_back(out);
    Rational w = edge_weight[i] * half;
    g.network.add_arc(in, out, w);
    for (VertexId u : h.edge(edges[i])) {
      g.network.add_arc(g.vertex_node[u], in, Capacity::infinite());
      g.network.add_arc(out, g.vertex_node[u], Capacity::infinite());
    }
    g.network.add_arc(in, g.t, w);
    g.network.add_arc(out, g.t, w);
  }
  g.network.add_arc(g.vertex_node[forced], g.t, Capacity::infinite());
  return g;
}

}  // namespace detail

/// Network whose min cut minus x̄(E) equals min |W| - x̄(E[W]) over W ∋ v̄.
/// Requires 0 <= x̄(e) <= 1.
inline GadgetGraph build_polytope_gadget(const Hypergraph& h,
                                         const EdgeVector& x,
                                         VertexId forced) {
  if (x.size() != h.num_edges())
    throw Error(ErrorCode::kInvalidArgument, "point has wrong length");
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (x[e].sign() < 0 || x[e] > Rational(1))
      throw Error(ErrorCode::kInvalidArgument,
                  "x(" + std::to_string(e) + ") = " + x[e].str() +
                      " outside [0,1]");
  std::vector<Rational> ones(h.num_vertices(), Rational(1));
  EdgeSet all = h.all_edges();
  return detail::build_edge_split(h, all, x.values, ones, {}, forced,
                                  GadgetKind::kPolytope);
}

/// Network for one greedy step of the partition-inequality oracle:
/// (s,v) = η⁺(v), (v,t) = -η⁻(v), edge arcs weighted by x̄ on `edges`.
/// Cut capacity = η(W) - x̄(F[W]) + x̄(F) - η⁻(V).
inline GadgetGraph build_supermodular_gadget(const Hypergraph& h,
                                             std::span<const EdgeId> edges,
                                             const EdgeVector& x,
                                             std::span<const Rational> eta,
                                             VertexId forced) {
  if (eta.size() != h.num_vertices())
    throw Error(ErrorCode::kInvalidArgument, "eta has wrong length");
  detail::check_edge_ids(h, edges);
  std::vector<Rational> source_cap(h.num_vertices());
  std::vector<Rational> sink_cap(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (eta[v].sign() > 0)
      source_cap[v] = eta[v];
    else
      sink_cap[v] = -eta[v];
  }
  std::vector<Rational> weight;
  weight.reserve(edges.size());
  for (EdgeId e : edges) {
    if (x[e].sign() < 0)
      throw Error(ErrorCode::kNegativeEntry, "x(" + std::to_string(e) + ")");
    weight.push_back(x[e]);
  }
  return detail::build_edge_split(h, edges, weight, source_cap, sink_cap,
                                  forced, GadgetKind::kSupermodular);
}

inline GadgetGraph build_supermodular_gadget(const Hypergraph& h,
                                             const EdgeVector& x,
                                             std::span<const Rational> eta,
                                             VertexId forced) {
  EdgeSet all = h.all_edges();
  return build_supermodular_gadget(h, all, x, eta, forced);
}

/// Network whose min cut minus |E| equals min β|W| - |E[W]| over W ∋ v̄.
inline GadgetGraph build_arboricity_gadget(const Hypergraph& h,
                                           const Rational& beta,
                                           VertexId forced) {
  if (beta.sign() <= 0)
    throw Error(ErrorCode::kInvalidArgument, "beta must be positive");
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (h.is_loop(e))
      throw Error(ErrorCode::kLoopPresent,
                  "edge " + std::to_string(e) + " has a single vertex");
  std::vector<Rational> source_cap(h.num_vertices(), beta);
  std::vector<Rational> weight(h.num_edges(), Rational(1));
  EdgeSet all = h.all_edges();
  return detail::build_edge_split(h, all, weight, source_cap, {}, forced,
                                  GadgetKind::kArboricity);
}

/// Network testing whether `edges` (an independent set plus `distinguished`)
/// is independent: min cut C gives C - |I'| = min |∪F| - |F| over F ∋ e_i.
inline GadgetGraph build_independence_gadget(const Hypergraph& h,
                                             std::span<const EdgeId> edges,
                                             EdgeId distinguished) {
  detail::check_edge_ids(h, edges);
  bool found = false;
  for (EdgeId e : edges) found = found || e == distinguished;
  if (!found)
    throw Error(ErrorCode::kInvalidArgument,
                "distinguished edge not in the edge list");

  GadgetGraph g;
  g.kind = GadgetKind::kIndependence;
  g.edges.assign(edges.begin(), edges.end());
  g.vertex_node.assign(h.num_vertices(), kNoNode);
  std::size_t next = 2 + edges.size();
  for (EdgeId e : edges)
    for (VertexId v : h.edge(e))
      if (g.vertex_node[v] == kNoNode) g.vertex_node[v] = next++;

  g.network = FlowNetwork(next, 0, 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::size_t node = 2 + i;
    g.edge_in.push_back(node);
    g.network.add_arc(g.s, node,
                      edges[i] == distinguished ? Capacity::infinite()
                                                : Capacity(1));
    for (VertexId v : h.edge(edges[i]))
      g.network.add_arc(node, g.vertex_node[v], Capacity::infinite());
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v)
    if (g.vertex_node[v] != kNoNode)
      g.network.add_arc(g.vertex_node[v], g.t, 1);
  return g;
}

/// Reads T', W and E1/E2/E3 off a cut of an edge-split gadget and checks the
/// structural consequences of the infinite arcs.
inline GadgetCutInterpretation interpret_gadget_cut(const Hypergraph& h,
                                                    const GadgetGraph& g,
                                                    const CutResult& cut) {
  if (g.kind == GadgetKind::kIndependence)
    throw Error(ErrorCode::kInvalidArgument,
                "independence gadget has no edge-split interpretation");
  GadgetCutInterpretation out;
  std::vector<char> sink_side(h.num_vertices(), 0);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (cut.contains(g.vertex_node[v])) {
      out.source_vertices.push_back(v);
    } else {
      out.sink_vertices.push_back(v);
      sink_side[v] = 1;
    }
  }
  HYPERMAT_CHECK(g.forced_vertex && sink_side[*g.forced_vertex],
                 "forced vertex on the source side");
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    EdgeId e = g.edges[i];
    bool in = cut.contains(g.edge_in[i]);
    bool out_side = cut.contains(g.edge_out[i]);
    bool any_source = false, all_source = true, all_sink = true;
    for (VertexId u : h.edge(e)) {
      any_source = any_source || !sink_side[u];
      all_source = all_source && !sink_side[u];
      all_sink = all_sink && sink_side[u];
    }
    HYPERMAT_CHECK(!any_source || in, "vertex on source side but e' is not");
    HYPERMAT_CHECK(!out_side || all_source, "e'' on source side alone");
    if (in && !out_side)
      out.e1.push_back(e);
    else if (in && out_side)
      out.e2.push_back(e);
    else if (!in && !out_side)
      out.e3.push_back(e);
    else
      internal_failure("e'' on the source side without e'");
    HYPERMAT_CHECK((!in && !out_side) == all_sink,
                   "E3 differs from the edges inside W");
  }
  return out;
}

/// Independence gadget cut: F = edges on the source side, value = C - |I'|.
struct IndependenceCutInterpretation {
  EdgeSet edges;
  VertexSet vertices;
  Rational value;
};

inline IndependenceCutInterpretation interpret_independence_cut(
    const Hypergraph& h, const GadgetGraph& g, const CutResult& cut) {
  if (g.kind != GadgetKind::kIndependence)
    throw Error(ErrorCode::kInvalidArgument, "not an independence gadget");
  IndependenceCutInterpretation out;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (cut.contains(g.edge_in[i])) out.edges.push_back(g.edges[i]);
  std::sort(out.edges.begin(), out.edges.end());
  for (VertexId v = 0; v < h.num_vertices(); ++v)
    if (g.vertex_node[v] != kNoNode && cut.contains(g.vertex_node[v]))
      out.vertices.push_back(v);
  out.value = cut.capacity - Rational(static_cast<long>(g.edges.size()));
  return out;
}

}  // namespace hypermat
