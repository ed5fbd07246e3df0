#pragma once

// Exact minimum s-t cut on directed networks with rational or infinite arc
// capacities.
//
// Capacities are scaled by the lcm of their denominators and the max flow is
// computed on integers (int64 when the total finite capacity leaves enough
// headroom, GMP integers otherwise) with Dinic's blocking-flow algorithm.
// Infinite arcs stay symbolic: their residual never decreases and they can
// never be part of a reported cut. The returned source side is the set of
// nodes reachable from s in the final residual network, i.e. the
// inclusion-minimal source side over all minimum cuts.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hypermat/error.hpp"
#include "hypermat/rational.hpp"

namespace hypermat {

class Capacity {
 public:
  Capacity() = default;
  Capacity(Rational v) : value_(std::move(v)) {}  // NOLINT
  Capacity(long v) : value_(v) {}                 // NOLINT
  Capacity(int v) : value_(v) {}                  // NOLINT

  static Capacity infinite() {
    Capacity c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const noexcept { return infinite_; }
  /// Meaningless for infinite capacities.
  const Rational& value() const noexcept { return value_; }

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

  bool operator==(const Capacity& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }

 private:
  Rational value_;
  bool infinite_ = false;
};

struct Arc {
  std::size_t tail;
  std::size_t head;
  Capacity capacity;
};

class FlowNetwork {
 public:
  FlowNetwork() = default;
  FlowNetwork(std::size_t num_nodes, std::size_t source, std::size_t sink)
      : num_nodes_(num_nodes), source_(source), sink_(sink) {
    if (source >= num_nodes || sink >= num_nodes)
      throw Error(ErrorCode::kInvalidArgument, "terminal out of range");
    if (source == sink)
      throw Error(ErrorCode::kInvalidArgument, "source equals sink");
  }

  std::size_t add_arc(std::size_t tail, std::size_t head, Capacity cap) {
    if (tail >= num_nodes_ || head >= num_nodes_)
      throw Error(ErrorCode::kInvalidArgument, "arc endpoint out of range");
    if (!cap.is_infinite() && cap.value().sign() < 0)
      throw Error(ErrorCode::kNegativeEntry,
                  "negative arc capacity " + cap.value().str());
    arcs_.push_back({tail, head, std::move(cap)});
    return arcs_.size() - 1;
  }

  void set_capacity(std::size_t arc, Capacity cap) {
    if (!cap.is_infinite() && cap.value().sign() < 0)
      throw Error(ErrorCode::kNegativeEntry,
                  "negative arc capacity " + cap.value().str());
    arcs_.at(arc).capacity = std::move(cap);
  }

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_.at(i); }

 private:
  std::size_t num_nodes_ = 0;
  std::size_t source_ = 0;
  std::size_t sink_ = 1;
  std::vector<Arc> arcs_;
};

struct CutResult {
  /// Sorted node ids on the source side (contains s, never t).
  std::vector<std::size_t> source_side;
  /// in_source[v] != 0 iff v is on the source side.
  std::vector<char> in_source;
  Rational capacity;

  bool contains(std::size_t node) const { return in_source.at(node) != 0; }
  bool operator==(const CutResult& o) const {
    return source_side == o.source_side && capacity == o.capacity;
  }
};

/// Capacity of the cut defined by a source-side mask; nullopt if an infinite
/// arc leaves the source side.
inline std::optional<Rational> cut_capacity(const FlowNetwork& net,
                                            const std::vector<char>& in_source) {
  Rational total;
  for (const Arc& a : net.arcs()) {
    if (in_source[a.tail] && !in_source[a.head]) {
      if (a.capacity.is_infinite()) return std::nullopt;
      total += a.capacity.value();
    }
  }
  return total;
}

namespace detail {

/// Dinic's algorithm on integer capacities. Arc 2i is the forward copy of
/// network arc i, 2i+1 its reverse.
template <typename Int>
class Dinic {
 public:
  Dinic(std::size_t n, std::size_t s, std::size_t t)
      : n_(n), s_(s), t_(t), first_(n, kNil), level_(n), iter_(n) {}

  void add_arc(std::size_t u, std::size_t v, Int cap, bool infinite) {
    push_half(u, v, std::move(cap), infinite);
    push_half(v, u, Int(0), false);
  }

  /// Runs to completion; `bound` must be an upper bound on the max flow.
  Int run(const Int& bound) {
    Int flow(0);
    while (flow < bound && bfs()) {
      for (std::size_t v = 0; v < n_; ++v) iter_[v] = first_[v];
      while (true) {
        Int remaining = bound - flow;
        Int pushed = dfs(s_, remaining);
        if (pushed == 0) break;
        flow += pushed;
        if (!(flow < bound)) break;
      }
    }
    return flow;
  }

  std::vector<char> reachable_from_source() const {
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack{s_};
    seen[s_] = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a = first_[u]; a != kNil; a = next_[a]) {
        if (!has_residual(a) || seen[to_[a]]) continue;
        seen[to_[a]] = 1;
        stack.push_back(to_[a]);
      }
    }
    return seen;
  }

 private:
  static constexpr std::size_t kNil = std::numeric_limits<std::size_t>::max();

  void push_half(std::size_t u, std::size_t v, Int cap, bool infinite) {
    to_.push_back(v);
    res_.push_back(std::move(cap));
    inf_.push_back(infinite ? 1 : 0);
    next_.push_back(first_[u]);
    first_[u] = to_.size() - 1;
  }

  bool has_residual(std::size_t a) const { return inf_[a] || res_[a] > 0; }

  bool bfs() {
    std::fill(level_.begin(), level_.end(), kNil);
    std::vector<std::size_t> queue{s_};
    level_[s_] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t a = first_[u]; a != kNil; a = next_[a]) {
        std::size_t v = to_[a];
        if (level_[v] != kNil || !has_residual(a)) continue;
        level_[v] = level_[u] + 1;
        queue.push_back(v);
      }
    }
    return level_[t_] != kNil;
  }

  Int dfs(std::size_t u, const Int& limit) {
    if (u == t_) return limit;
    for (std::size_t& a = iter_[u]; a != kNil; a = next_[a]) {
      std::size_t v = to_[a];
      if (level_[v] != level_[u] + 1 || !has_residual(a)) continue;
      const Int& room = (inf_[a] || limit < res_[a]) ? limit : res_[a];
      Int pushed = dfs(v, Int(room));
      if (pushed > 0) {
        if (!inf_[a]) res_[a] -= pushed;
        res_[a ^ 1] += pushed;
        return pushed;
      }
    }
    return Int(0);
  }

  std::size_t n_, s_, t_;
  std::vector<std::size_t> first_, next_, to_;
  std::vector<Int> res_;
  std::vector<char> inf_;
  std::vector<std::size_t> level_, iter_;
};

/// Is there an s-t path using only infinite arcs?
inline bool infinite_path_exists(const FlowNetwork& net) {
  std::vector<std::vector<std::size_t>> adj(net.num_nodes());
  for (const Arc& a : net.arcs())
    if (a.capacity.is_infinite()) adj[a.tail].push_back(a.head);
  std::vector<char> seen(net.num_nodes(), 0);
  std::vector<std::size_t> stack{net.source()};
  seen[net.source()] = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    if (u == net.sink()) return true;
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return false;
}

template <typename Int, typename Convert>
std::pair<mpz_class, std::vector<char>> solve_scaled(
    const FlowNetwork& net, const std::vector<mpz_class>& scaled,
    const mpz_class& total, Convert convert) {
  Dinic<Int> dinic(net.num_nodes(), net.source(), net.sink());
  for (std::size_t i = 0; i < net.num_arcs(); ++i) {
    const Arc& a = net.arc(i);
    bool inf = a.capacity.is_infinite();
    dinic.add_arc(a.tail, a.head, inf ? Int(0) : convert(scaled[i]), inf);
  }
  Int flow = dinic.run(convert(total));
  mpz_class flow_z;
  if constexpr (std::is_same_v<Int, mpz_class>) {
    flow_z = flow;
  } else {
    flow_z = mpz_class(std::to_string(flow));
  }
  return {flow_z, dinic.reachable_from_source()};
}

}  // namespace detail

/// Minimum s-t cut with the inclusion-minimal source side. Throws
/// Error(kNoFiniteCut) when every s-t cut crosses an infinite arc.
inline CutResult min_st_cut(const FlowNetwork& net) {
  if (net.num_nodes() < 2)
    throw Error(ErrorCode::kInvalidArgument, "network needs two nodes");
  if (detail::infinite_path_exists(net))
    throw Error(ErrorCode::kNoFiniteCut,
                "every s-t cut crosses an infinite arc");

  mpz_class scale(1);
  for (const Arc& a : net.arcs())
    if (!a.capacity.is_infinite())
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              a.capacity.value().raw().get_den_mpz_t());

  std::vector<mpz_class> scaled(net.num_arcs());
  mpz_class total(0);
  for (std::size_t i = 0; i < net.num_arcs(); ++i) {
    const Arc& a = net.arc(i);
    if (a.capacity.is_infinite()) continue;
    const mpq_class& q = a.capacity.value().raw();
    scaled[i] = q.get_num() * (scale / q.get_den());
    total += scaled[i];
  }

  // Residuals never exceed 2 * total, so 2^61 keeps int64 arithmetic exact.
  static const mpz_class kInt64Headroom = mpz_class(1) << 61;
  std::pair<mpz_class, std::vector<char>> solved;
  if (total < kInt64Headroom) {
    solved = detail::solve_scaled<std::int64_t>(
        net, scaled, total,
        [](const mpz_class& z) { return static_cast<std::int64_t>(z.get_si()); });
  } else {
    solved = detail::solve_scaled<mpz_class>(
        net, scaled, total, [](const mpz_class& z) { return z; });
  }

  CutResult result;
  result.in_source = std::move(solved.second);
  for (std::size_t v = 0; v < net.num_nodes(); ++v)
    if (result.in_source[v]) result.source_side.push_back(v);
  result.capacity = Rational(mpq_class(solved.first, scale));

  auto check = cut_capacity(net, result.in_source);
  HYPERMAT_CHECK(!result.in_source[net.sink()], "sink reachable after max flow");
  HYPERMAT_CHECK(check.has_value(), "minimum cut crosses an infinite arc");
  HYPERMAT_CHECK(*check == result.capacity, "max flow differs from min cut");
  return result;
}

struct CapacityUpdate {
  std::size_t arc;
  Capacity capacity;
};

/// Direction in which source/sink arc capacities move along a sequence. Only
/// recorded today; a warm-started parametric solver can exploit it.
enum class SequenceMonotonicity {
  kUnspecified,
  kSourceNonincreasingSinkNondecreasing,
  kSourceNondecreasingSinkNonincreasing,
};

struct SequenceCut {
  std::optional<CutResult> cut;
  std::optional<ErrorCode> error;
};

/// Solves the template network and then each cumulative revision of it.
/// Revisions may only touch arcs incident to s or t. The result has
/// updates.size() + 1 entries; entry 0 is the unmodified template.
inline std::vector<SequenceCut> min_st_cut_sequence(
    const FlowNetwork& templ,
    const std::vector<std::vector<CapacityUpdate>>& updates,
    SequenceMonotonicity /*hint*/ = SequenceMonotonicity::kUnspecified) {
  for (const auto& step : updates)
    for (const auto& u : step) {
      const Arc& a = templ.arc(u.arc);
      bool terminal = a.tail == templ.source() || a.head == templ.source() ||
                      a.tail == templ.sink() || a.head == templ.sink();
      if (!terminal)
        throw Error(ErrorCode::kInvalidArgument,
                    "update touches arc " + std::to_string(u.arc) +
                        " which is not incident to s or t");
    }

  auto solve = [](const FlowNetwork& net) {
    SequenceCut out;
    try {
      out.cut = min_st_cut(net);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInternal) throw;
      out.error = e.code();
    }
    return out;
  };

  std::vector<SequenceCut> results;
  results.reserve(updates.size() + 1);
  FlowNetwork current = templ;
  results.push_back(solve(current));
  for (const auto& step : updates) {
    for (const auto& u : step) current.set_capacity(u.arc, u.capacity);
    results.push_back(solve(current));
  }
  return results;
}

}  // namespace hypermat
