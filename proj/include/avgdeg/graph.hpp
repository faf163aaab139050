#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "avgdeg/error.hpp"

namespace avgdeg {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Immutable after construction. Neighbor lists are kept sorted; for graphs up
/// to kMatrixLimit vertices an adjacency bit matrix backs O(1) adjacency tests.
class Graph {
 public:
  static constexpr int kMatrixLimit = 4096;

  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    ensure(n >= 0, Errc::InvalidArgument, "negative vertex count");
    build_matrix();
  }

  /// Throws Error(InvalidArgument) on self-loops, duplicates or ids out of range.
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      ensure(e.u >= 0 && e.v < n_, Errc::InvalidArgument,
             "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " out of range");
      ensure(e.u != e.v, Errc::InvalidArgument, "self-loop at " + std::to_string(e.u));
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (Vertex x = 0; x < n_; ++x) {
      auto& row = adj_[x];
      std::sort(row.begin(), row.end());
      auto dup = std::adjacent_find(row.begin(), row.end());
      ensure(dup == row.end(), Errc::InvalidArgument,
             "duplicate edge " + std::to_string(x) + " " + std::to_string(dup == row.end() ? 0 : *dup));
    }
    m_ = static_cast<std::int64_t>(edges.size());
    build_matrix();
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int order() const noexcept { return n_; }
  std::int64_t size() const noexcept { return m_; }

  const std::vector<Vertex>& neighbors(Vertex x) const { return adj_[x]; }
  int degree(Vertex x) const { return static_cast<int>(adj_[x].size()); }

  bool adjacent(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    if (!matrix_.empty()) {
      return (matrix_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1U;
    }
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  /// Neighborhood as a 64-bit mask; only meaningful when order() <= 64.
  std::uint64_t neighbor_mask(Vertex x) const {
    return words_ == 1 ? matrix_[static_cast<std::size_t>(x)] : 0;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b : adj_[a])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  friend bool operator==(const Graph& x, const Graph& y) { return x.n_ == y.n_ && x.adj_ == y.adj_; }

 private:
  void build_matrix() {
    matrix_.clear();
    words_ = 0;
    if (n_ == 0 || n_ > kMatrixLimit) return;
    words_ = (n_ + 63) / 64;
    matrix_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b : adj_[a]) matrix_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  }

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> matrix_;
  int words_ = 0;
};

/// Sorted, duplicate-free set of vertex ids of some graph.
class VertexSet {
 public:
  VertexSet() = default;

  /// Throws Error(InvalidArgument) if a member is outside 0..n-1 or repeated.
  VertexSet(const Graph& g, std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    ensure(std::adjacent_find(members_.begin(), members_.end()) == members_.end(), Errc::InvalidArgument,
           "duplicate vertex in set");
    ensure(members_.empty() || (members_.front() >= 0 && members_.back() < g.order()), Errc::InvalidArgument,
           "vertex set member out of range");
  }

  static VertexSet all(const Graph& g) {
    std::vector<Vertex> v(static_cast<std::size_t>(g.order()));
    std::iota(v.begin(), v.end(), 0);
    return VertexSet(g, std::move(v));
  }

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex x) const { return std::binary_search(members_.begin(), members_.end(), x); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// A subgraph together with the id of each of its vertices in the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// Closed cycle (u_0, ..., u_{m-1}); the edge u_{m-1} u_0 is implied.
struct CycleWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// 2e > (k-1)v in exact integer arithmetic.
inline bool in_Dk(const Graph& g, int k) {
  ensure(k >= 1, Errc::InvalidArgument, "k must be positive");
  return 2 * g.size() > static_cast<std::int64_t>(k - 1) * g.order();
}

/// 2e - (k-1)v; positive exactly for members of D_k.
inline std::int64_t dk_slack(const Graph& g, int k) {
  return 2 * g.size() - static_cast<std::int64_t>(k - 1) * g.order();
}

/// Number of edges with at least one end in X.
inline std::int64_t edge_boundary_count(const Graph& g, const VertexSet& x) {
  std::int64_t degsum = 0;
  std::int64_t inside_twice = 0;
  for (Vertex a : x) {
    degsum += g.degree(a);
    for (Vertex b : g.neighbors(a))
      if (x.contains(b)) ++inside_twice;
  }
  return degsum - inside_twice / 2;
}

namespace detail {

inline Subgraph restrict_to(const Graph& g, const std::vector<bool>& keep) {
  std::vector<Vertex> to_parent;
  std::vector<Vertex> to_child(static_cast<std::size_t>(g.order()), -1);
  for (Vertex a = 0; a < g.order(); ++a) {
    if (keep[a]) {
      to_child[a] = static_cast<Vertex>(to_parent.size());
      to_parent.push_back(a);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (keep[e.u] && keep[e.v]) edges.emplace_back(to_child[e.u], to_child[e.v]);
  return {Graph(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

}  // namespace detail

/// G - X, relabeled densely in increasing order of the surviving ids.
inline Subgraph remove_vertices(const Graph& g, const VertexSet& x) {
  std::vector<bool> keep(static_cast<std::size_t>(g.order()), true);
  for (Vertex a : x) keep[a] = false;
  return detail::restrict_to(g, keep);
}

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  ensure(!x.empty(), Errc::EmptySet, "induced subgraph of an empty set");
  std::vector<bool> keep(static_cast<std::size_t>(g.order()), false);
  for (Vertex a : x) keep[a] = true;
  return detail::restrict_to(g, keep);
}

/// Same vertex set, listed edges deleted.
inline Graph remove_edges(const Graph& g, std::span<const Edge> drop) {
  std::vector<Edge> sorted_drop(drop.begin(), drop.end());
  std::sort(sorted_drop.begin(), sorted_drop.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!std::binary_search(sorted_drop.begin(), sorted_drop.end(), e)) kept.push_back(e);
  return Graph(g.order(), kept);
}

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), edges);
}

}  // namespace avgdeg
