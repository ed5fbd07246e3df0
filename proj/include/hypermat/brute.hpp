#pragma once

// Exhaustive reference implementations for small instances. Nothing here
// calls the flow-based algorithms; every quantity is computed from the
// definitions by enumeration, so these serve as independent oracles.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermat/error.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/rational.hpp"

namespace hypermat::brute {

namespace detail {

inline void guard(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kSizeGuard, "instance too large: " + what);
}

inline std::uint32_t edge_mask(const Hypergraph& h, EdgeId e) {
  std::uint32_t mask = 0;
  for (VertexId v : h.edge(e)) mask |= std::uint32_t{1} << v;
  return mask;
}

}  // namespace detail

/// Calls `visit(labels, blocks)` for every partition of {0..n-1}; labels are
/// restricted growth strings. Stops early when visit returns false.
inline void for_each_partition(
    std::size_t n,
    const std::function<bool(const std::vector<std::size_t>&, std::size_t)>&
        visit) {
  detail::guard(n <= 12, "partition enumeration needs n <= 12");
  if (n == 0) {
    visit({}, 0);
    return;
  }
  std::vector<std::size_t> label(n, 0);
  std::vector<std::size_t> max_prefix(n, 0);
  while (true) {
    if (!visit(label, max_prefix[n - 1] + 1)) return;
    std::size_t i = n - 1;
    while (i > 0 && label[i] > max_prefix[i - 1]) --i;
    if (i == 0) return;
    ++label[i];
    max_prefix[i] = std::max(max_prefix[i - 1], label[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      label[j] = 0;
      max_prefix[j] = max_prefix[i];
    }
  }
}

inline std::vector<Partition> enum_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<std::size_t>& l, std::size_t) {
    out.push_back(Partition::from_labels(l));
    return true;
  });
  return out;
}

/// Edges of F meeting at least two blocks (labels form).
inline Rational crossing_weight(const Hypergraph& h, std::span<const EdgeId> f,
                                const EdgeVector& x,
                                const std::vector<std::size_t>& label) {
  Rational total;
  for (EdgeId e : f) {
    auto verts = h.edge(e);
    for (VertexId v : verts)
      if (label[v] != label[verts.front()]) {
        total += x[e];
        break;
      }
  }
  return total;
}

struct PartitionMinimum {
  Rational value;
  Partition partition;
};

/// min over partitions of x(δ_F(P)) - β(|P| - 1).
inline PartitionMinimum min_partition(const Hypergraph& h,
                                      std::span<const EdgeId> f,
                                      const EdgeVector& x,
                                      const Rational& beta) {
  std::optional<PartitionMinimum> best;
  for_each_partition(h.num_vertices(), [&](const auto& label,
                                           std::size_t blocks) {
    Rational value = crossing_weight(h, f, x, label) -
                     beta * Rational(static_cast<long>(blocks) - 1);
    if (!best || value < best->value)
      best = PartitionMinimum{value, Partition::from_labels(label)};
    return true;
  });
  return *best;
}

/// Is F a hyperforest: |F[W]| <= |W| - 1 for every nonempty W ⊆ V.
inline bool is_hyperforest(const Hypergraph& h, std::span<const EdgeId> f) {
  const std::size_t n = h.num_vertices();
  detail::guard(n <= 20, "hyperforest check needs n <= 20");
  std::vector<std::uint32_t> masks;
  for (EdgeId e : f) masks.push_back(detail::edge_mask(h, e));
  for (std::uint32_t w = 1; w < (std::uint32_t{1} << n); ++w) {
    long inside = 0;
    for (std::uint32_t m : masks)
      if ((m & ~w) == 0) ++inside;
    if (inside > std::popcount(w) - 1) return false;
  }
  return true;
}

/// Independence table over all edge subsets, for rank and polytope queries.
class Matroid {
 public:
  explicit Matroid(const Hypergraph& h) : m_(h.num_edges()) {
    const std::size_t n = h.num_vertices();
    detail::guard(m_ <= 16 && n <= 16 && m_ + n <= 22,
                  "matroid table needs m, n <= 16 and m + n <= 22");
    std::vector<std::uint32_t> masks;
    for (EdgeId e = 0; e < m_; ++e) masks.push_back(detail::edge_mask(h, e));
    independent_.assign(std::size_t{1} << m_, 0);
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << m_); ++s) {
      // Supersets of dependent sets are dependent.
      bool ok = s == 0 || independent_[s & (s - 1)];
      for (std::uint32_t w = 1; ok && w < (std::uint32_t{1} << n); ++w) {
        int inside = 0;
        for (std::size_t e = 0; e < m_; ++e)
          if ((s >> e & 1) && (masks[e] & ~w) == 0) ++inside;
        ok = inside <= std::popcount(w) - 1;
      }
      independent_[s] = ok;
    }
    rank_.assign(std::size_t{1} << m_, 0);
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << m_); ++s) {
      if (independent_[s]) {
        rank_[s] = std::popcount(s);
        continue;
      }
      for (std::size_t e = 0; e < m_; ++e)
        if (s >> e & 1) rank_[s] = std::max(rank_[s], rank_[s & ~(1u << e)]);
    }
  }

  std::size_t num_edges() const noexcept { return m_; }

  static std::uint32_t mask_of(std::span<const EdgeId> f) {
    std::uint32_t s = 0;
    for (EdgeId e : f) s |= std::uint32_t{1} << e;
    return s;
  }

  bool independent(std::span<const EdgeId> f) const {
    return independent_[mask_of(f)];
  }
  std::size_t rank(std::span<const EdgeId> f) const {
    return rank_[mask_of(f)];
  }
  bool independent_mask(std::uint32_t s) const { return independent_[s]; }
  std::size_t rank_mask(std::uint32_t s) const { return rank_[s]; }

 private:
  std::size_t m_;
  std::vector<char> independent_;
  std::vector<int> rank_;
};

inline std::size_t rank(const Hypergraph& h, std::span<const EdgeId> f) {
  return Matroid(h).rank(f);
}

struct PolytopeCheck {
  /// min over S of r(S) - x(S), with x >= 0 checked separately.
  Rational slack;
  EdgeSet most_violated;
  bool nonnegative = true;
  bool in_polytope() const { return nonnegative && slack.sign() >= 0; }
};

inline PolytopeCheck check_polytope(const Hypergraph& h, const EdgeVector& x) {
  Matroid mat(h);
  PolytopeCheck out;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (x[e].sign() < 0) out.nonnegative = false;
  std::optional<Rational> best;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << h.num_edges()); ++s) {
    Rational slack(static_cast<long>(mat.rank_mask(s)));
    EdgeSet edges;
    for (EdgeId e = 0; e < h.num_edges(); ++e)
      if (s >> e & 1) {
        slack -= x[e];
        edges.push_back(e);
      }
    if (!best || slack < *best) {
      best = slack;
      out.most_violated = std::move(edges);
    }
  }
  out.slack = *best;
  return out;
}

/// Maximum total weight over all hyperforests.
inline Rational max_weight_forest(const Hypergraph& h, const EdgeVector& w) {
  Matroid mat(h);
  Rational best;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << h.num_edges()); ++s) {
    if (!mat.independent_mask(s)) continue;
    Rational total;
    for (EdgeId e = 0; e < h.num_edges(); ++e)
      if (s >> e & 1) total += w[e];
    if (total > best) best = total;
  }
  return best;
}

/// min over partitions with >= 2 blocks of c(δ(P)) / (|P| - 1).
inline Rational strength(const Hypergraph& h, const EdgeVector& c) {
  detail::guard(h.num_vertices() >= 2, "strength needs n >= 2");
  const EdgeSet all = h.all_edges();
  std::optional<Rational> best;
  for_each_partition(h.num_vertices(), [&](const auto& label,
                                           std::size_t blocks) {
    if (blocks < 2) return true;
    Rational r = crossing_weight(h, all, c, label) /
                 Rational(static_cast<long>(blocks) - 1);
    if (!best || r < *best) best = r;
    return true;
  });
  return *best;
}

/// max over X with |X| >= 2 of |E[X]| / (|X| - 1); 0 without edges.
inline Rational arboricity(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  detail::guard(n <= 20, "arboricity needs n <= 20");
  std::vector<std::uint32_t> masks;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    masks.push_back(detail::edge_mask(h, e));
  Rational best;
  for (std::uint32_t x = 1; x < (std::uint32_t{1} << n); ++x) {
    int size = std::popcount(x);
    if (size < 2) continue;
    long inside = 0;
    for (std::uint32_t m : masks)
      if ((m & ~x) == 0) ++inside;
    Rational r = Rational(inside) / Rational(static_cast<long>(size) - 1);
    if (r > best) best = r;
  }
  return best;
}

/// Fewest hyperforests whose union is E, by backtracking over colorings.
inline std::size_t min_forest_cover(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  detail::guard(m <= 12, "forest cover needs m <= 12");
  for (EdgeId e = 0; e < m; ++e)
    if (h.is_loop(e))
      throw Error(ErrorCode::kLoopPresent, "loop edge " + std::to_string(e));
  if (m == 0) return 0;
  Matroid mat(h);
  for (std::size_t k = 1;; ++k) {
    std::vector<std::uint32_t> color(k, 0);
    std::function<bool(EdgeId)> place = [&](EdgeId e) {
      if (e == m) return true;
      for (std::size_t c = 0; c < k; ++c) {
        std::uint32_t next = color[c] | (std::uint32_t{1} << e);
        if (!mat.independent_mask(next)) continue;
        color[c] = next;
        if (place(e + 1)) return true;
        color[c] &= ~(std::uint32_t{1} << e);
        if (color[c] == 0) break;  // empty colors are interchangeable
      }
      return false;
    };
    if (place(0)) return k;
  }
}

/// Does x satisfy x(δ(P)) >= k(|P| - 1) for every partition?
inline bool satisfies_partition_constraints(const Hypergraph& h,
                                            const EdgeVector& x,
                                            const Rational& k) {
  const EdgeSet all = h.all_edges();
  bool ok = true;
  for_each_partition(h.num_vertices(), [&](const auto& label,
                                           std::size_t blocks) {
    ok = crossing_weight(h, all, x, label) >=
         k * Rational(static_cast<long>(blocks) - 1);
    return ok;
  });
  return ok;
}

struct IntegerReinforcement {
  Rational cost;
  EdgeVector x;
};

/// Cheapest integral x with 0 <= x <= u satisfying all partition
/// constraints; nullopt if none exists. u must be integral.
inline std::optional<IntegerReinforcement> min_cost_integer_reinforcement(
    const Hypergraph& h, long k, const EdgeVector& d, const EdgeVector& u) {
  const std::size_t m = h.num_edges();
  double combos = 1;
  std::vector<long> bound(m);
  for (EdgeId e = 0; e < m; ++e) {
    detail::guard(u[e].is_integer(), "integral bounds");
    bound[e] = u[e].numerator().get_si();
    combos *= static_cast<double>(bound[e] + 1);
  }
  detail::guard(combos <= 2e5, "at most 2e5 integer points");

  const Rational kk(k);
  std::optional<IntegerReinforcement> best;
  std::vector<long> cur(m, 0);
  while (true) {
    EdgeVector x(EdgeRole::kPoint, {});
    Rational cost;
    for (EdgeId e = 0; e < m; ++e) {
      x.values.emplace_back(cur[e]);
      cost += d[e] * x.values.back();
    }
    if ((!best || cost < best->cost) &&
        satisfies_partition_constraints(h, x, kk))
      best = IntegerReinforcement{cost, std::move(x)};
    std::size_t i = 0;
    while (i < m && cur[i] == bound[i]) cur[i++] = 0;
    if (i == m) break;
    ++cur[i];
  }
  return best;
}

}  // namespace hypermat::brute
