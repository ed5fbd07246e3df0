#pragma once

// Core hypergraph types: hyperedges over dense vertex ids, per-edge rational
// vectors, vertex partitions, and the induced / crossing edge queries.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hypermat/error.hpp"
#include "hypermat/rational.hpp"

namespace hypermat {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Strictly increasing vertex ids.
using VertexSet = std::vector<VertexId>;
/// Strictly increasing edge ids.
using EdgeSet = std::vector<EdgeId>;

class Hypergraph {
 public:
  Hypergraph() = default;

  /// Each edge must be nonempty with distinct ids below n. Vertices are
  /// stored sorted; parallel edges keep distinct ids.
  Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges)
      : n_(n), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto& e = edges_[i];
      if (e.empty())
        throw Error(ErrorCode::kEmptyEdge, "edge " + std::to_string(i));
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw Error(ErrorCode::kDuplicateVertexInEdge,
                    "edge " + std::to_string(i));
      if (e.back() >= n_)
        throw Error(ErrorCode::kVertexOutOfRange,
                    "edge " + std::to_string(i) + " uses vertex " +
                        std::to_string(e.back()) + " >= n=" +
                        std::to_string(n_));
    }
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const VertexId> edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::vector<VertexId>>& edges() const noexcept {
    return edges_;
  }

  bool is_loop(EdgeId e) const { return edges_.at(e).size() == 1; }

  EdgeSet all_edges() const {
    EdgeSet all(edges_.size());
    std::iota(all.begin(), all.end(), EdgeId{0});
    return all;
  }

  VertexSet all_vertices() const {
    VertexSet all(n_);
    std::iota(all.begin(), all.end(), VertexId{0});
    return all;
  }

  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<VertexId>> edges_;
};

enum class EdgeRole { kPoint, kCapacity, kCost, kBound, kWeight };

/// A per-edge exact vector (point, capacity, cost, bound or weight).
struct EdgeVector {
  EdgeRole role = EdgeRole::kPoint;
  std::vector<Rational> values;

  EdgeVector() = default;
  EdgeVector(EdgeRole r, std::vector<Rational> v)
      : role(r), values(std::move(v)) {}

  static EdgeVector constant(EdgeRole r, std::size_t m, const Rational& c) {
    return EdgeVector(r, std::vector<Rational>(m, c));
  }

  std::size_t size() const noexcept { return values.size(); }
  const Rational& operator[](EdgeId e) const { return values[e]; }
  Rational& operator[](EdgeId e) { return values[e]; }

  /// Length must equal m and every entry must be nonnegative.
  void validate(std::size_t m, bool require_integral = false) const {
    if (values.size() != m)
      throw Error(ErrorCode::kInvalidArgument,
                  "edge vector has length " + std::to_string(values.size()) +
                      ", expected " + std::to_string(m));
    for (std::size_t e = 0; e < m; ++e) {
      if (values[e].sign() < 0)
        throw Error(ErrorCode::kNegativeEntry,
                    "entry " + std::to_string(e) + " is " + values[e].str());
      if (require_integral && !values[e].is_integer())
        throw Error(ErrorCode::kInvalidArgument,
                    "entry " + std::to_string(e) + " is not integral");
    }
  }

  Rational sum(std::span<const EdgeId> edges) const {
    Rational total;
    for (EdgeId e : edges) total += values.at(e);
    return total;
  }

  bool operator==(const EdgeVector&) const = default;
};

/// Disjoint nonempty vertex blocks covering 0..n-1. Stored canonically: each
/// block sorted, blocks ordered by their smallest vertex.
class Partition {
 public:
  Partition() = default;

  Partition(std::size_t n, std::vector<VertexSet> blocks)
      : blocks_(std::move(blocks)) {
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (auto& b : blocks_) {
      if (b.empty())
        throw Error(ErrorCode::kInvalidPartition, "empty block");
      std::sort(b.begin(), b.end());
      for (VertexId v : b) {
        if (v >= n)
          throw Error(ErrorCode::kVertexOutOfRange,
                      "vertex " + std::to_string(v));
        if (seen[v])
          throw Error(ErrorCode::kOverlappingBlocks,
                      "vertex " + std::to_string(v) + " in two blocks");
        seen[v] = 1;
        ++covered;
      }
    }
    if (covered != n)
      throw Error(ErrorCode::kInvalidPartition, "blocks do not cover V");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const VertexSet& a, const VertexSet& b) {
                return a.front() < b.front();
              });
  }

  static Partition singletons(std::size_t n) {
    std::vector<VertexSet> blocks;
    blocks.reserve(n);
    for (VertexId v = 0; v < n; ++v) blocks.push_back({v});
    return Partition(n, std::move(blocks));
  }

  static Partition whole(std::size_t n) {
    VertexSet all(n);
    std::iota(all.begin(), all.end(), VertexId{0});
    if (n == 0) return Partition(0, {});
    return Partition(n, {std::move(all)});
  }

  /// Partition from a block label per vertex (labels need not be dense).
  static Partition from_labels(std::span<const std::size_t> label) {
    std::vector<VertexSet> blocks;
    std::vector<std::size_t> slot;
    std::vector<std::size_t> label_to_block;
    for (VertexId v = 0; v < label.size(); ++v) {
      std::size_t l = label[v];
      if (l >= label_to_block.size())
        label_to_block.resize(l + 1, static_cast<std::size_t>(-1));
      if (label_to_block[l] == static_cast<std::size_t>(-1)) {
        label_to_block[l] = blocks.size();
        blocks.emplace_back();
      }
      blocks[label_to_block[l]].push_back(v);
    }
    return Partition(label.size(), std::move(blocks));
  }

  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  const VertexSet& block(std::size_t i) const { return blocks_.at(i); }

  /// Block index of every vertex.
  std::vector<std::size_t> labels(std::size_t n) const {
    std::vector<std::size_t> label(n, 0);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (VertexId v : blocks_[i]) label[v] = i;
    return label;
  }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<VertexSet> blocks_;
};

namespace detail {

inline void check_edge_ids(const Hypergraph& h, std::span<const EdgeId> f) {
  for (EdgeId e : f)
    if (e >= h.num_edges())
      throw Error(ErrorCode::kEdgeOutOfRange, "edge id " + std::to_string(e));
}

inline std::vector<char> vertex_mask(const Hypergraph& h,
                                     std::span<const VertexId> x) {
  std::vector<char> mask(h.num_vertices(), 0);
  for (VertexId v : x) {
    if (v >= h.num_vertices())
      throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v));
    mask[v] = 1;
  }
  return mask;
}

inline EdgeSet normalized(std::span<const EdgeId> f) {
  EdgeSet out(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// F[X]: the edges of F contained in X.
inline EdgeSet induced_edges(const Hypergraph& h, std::span<const EdgeId> f,
                             std::span<const VertexId> x) {
  detail::check_edge_ids(h, f);
  auto in_x = detail::vertex_mask(h, x);
  EdgeSet out;
  for (EdgeId e : detail::normalized(f)) {
    auto verts = h.edge(e);
    if (std::all_of(verts.begin(), verts.end(),
                    [&](VertexId v) { return in_x[v] != 0; }))
      out.push_back(e);
  }
  return out;
}

/// δ_F(family): edges of F included in the union of the (disjoint) blocks
/// and meeting at least two of them. The family may be partial.
inline EdgeSet cross_edges(const Hypergraph& h, std::span<const EdgeId> f,
                           const std::vector<VertexSet>& family) {
  detail::check_edge_ids(h, f);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(h.num_vertices(), kNone);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (VertexId v : family[i]) {
      if (v >= h.num_vertices())
        throw Error(ErrorCode::kVertexOutOfRange,
                    "vertex " + std::to_string(v));
      if (owner[v] != kNone && owner[v] != i)
        throw Error(ErrorCode::kOverlappingBlocks,
                    "vertex " + std::to_string(v) + " in two blocks");
      owner[v] = i;
    }
  }
  EdgeSet out;
  for (EdgeId e : detail::normalized(f)) {
    auto verts = h.edge(e);
    bool included = true;
    bool crossing = false;
    for (VertexId v : verts) {
      if (owner[v] == kNone) {
        included = false;
        break;
      }
      if (owner[v] != owner[verts.front()]) crossing = true;
    }
    if (included && crossing) out.push_back(e);
  }
  return out;
}

inline EdgeSet cross_edges(const Hypergraph& h, std::span<const EdgeId> f,
                           const Partition& p) {
  return cross_edges(h, f, p.blocks());
}

}  // namespace hypermat
