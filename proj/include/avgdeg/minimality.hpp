#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"
#include "avgdeg/maxflow.hpp"

namespace avgdeg {

/// 2 d_G(X) - (k-1)|X|.
inline std::int64_t deficiency_value(const Graph& g, int k, const VertexSet& x) {
  return 2 * edge_boundary_count(g, x) - static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(x.size());
}

struct DeficiencyCertificate {
  VertexSet set;
  std::int64_t value = 0;
  int k = 0;

  /// The set breaks the inequality 2 d(X) > (k-1)|X|.
  bool violating() const noexcept { return value <= 0; }
};

inline bool verify_certificate(const Graph& g, const DeficiencyCertificate& c) {
  return !c.set.empty() && deficiency_value(g, c.k, c.set) == c.value;
}

namespace detail {

// Minimizes 2d(X) - (k-1)|X| = sum_{v in X} (2d(v) - (k-1)) - 2 e(G[X]) over vertex sets X
// that contain `forced` (if >= 0) and avoid every vertex below `forced`. This is a
// maximum-closure problem: selecting an edge node earns 2 and requires both endpoints.
inline VertexSet min_deficiency_cut(const Graph& g, int k, Vertex forced) {
  const int n = g.order();
  const auto edges = g.edges();
  const int source = 0;
  const int sink = 1;
  auto vnode = [](Vertex v) { return 2 + v; };
  FlowNetwork net(2 + n + static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int enode = 2 + n + static_cast<int>(i);
    net.add_arc(source, enode, 2);
    net.add_arc(enode, vnode(edges[i].u), FlowNetwork::kInfinite);
    net.add_arc(enode, vnode(edges[i].v), FlowNetwork::kInfinite);
  }
  std::int64_t gain_total = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::int64_t weight = 2 * static_cast<std::int64_t>(g.degree(v)) - (k - 1);
    if (weight > 0) net.add_arc(vnode(v), sink, weight);
    if (weight < 0) {
      net.add_arc(source, vnode(v), -weight);
      gain_total -= weight;
    }
    if (forced >= 0 && v < forced) net.add_arc(vnode(v), sink, FlowNetwork::kInfinite);
  }
  if (forced >= 0) net.add_arc(source, vnode(forced), FlowNetwork::kInfinite);

  const std::int64_t cut = net.max_flow(source, sink);
  const auto side = net.source_side(source);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if (side[vnode(v)]) members.push_back(v);
  VertexSet x(g, std::move(members));
  ensure(cut - 2 * g.size() - gain_total == deficiency_value(g, k, x), Errc::Internal,
         "min-cut value disagrees with the extracted set");
  return x;
}

}  // namespace detail

/// Exact minimum of 2 d(X) - (k-1)|X| over nonempty X, via s-t minimum cuts.
///
/// One unconstrained cut settles the case where the optimum is negative or is
/// attained by a nonempty set; otherwise every vertex is forced in once (with
/// smaller ids forced out) so that the nonempty optimum is still found.
inline DeficiencyCertificate minimize_deficiency(const Graph& g, int k) {
  ensure(k >= 1, Errc::InvalidArgument, "k must be positive");
  ensure(g.order() > 0, Errc::EmptySet, "graph has no vertices");
  VertexSet x = detail::min_deficiency_cut(g, k, -1);
  if (!x.empty()) return {x, deficiency_value(g, k, x), k};

  std::optional<DeficiencyCertificate> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet cand = detail::min_deficiency_cut(g, k, v);
    const auto value = deficiency_value(g, k, cand);
    if (!best || value < best->value) best = DeficiencyCertificate{std::move(cand), value, k};
  }
  return *best;
}

/// A nonempty minimizer of 2 d(X) - (k-1)|X| when that minimum is <= 0.
inline std::optional<DeficiencyCertificate> find_deficient_set(const Graph& g, int k) {
  if (g.order() == 0) return std::nullopt;
  auto cert = minimize_deficiency(g, k);
  if (!cert.violating()) return std::nullopt;
  return cert;
}

inline bool verify_remark1(const Graph& g, int k, const VertexSet& x) {
  ensure(!x.empty(), Errc::EmptySet, "set density check needs a nonempty set");
  return deficiency_value(g, k, x) > 0;
}

struct MinimalityReport {
  bool is_member = false;
  bool is_minimal = false;
  std::int64_t slack = 0;  // 2e - (k-1)v
  /// Some edge e with G - e still in D_k.
  std::optional<Edge> removable_edge;
  /// Some nonempty X with G - X still in D_k, i.e. value < slack.
  std::optional<DeficiencyCertificate> removable_set;
};

/// With s = 2e - (k-1)v, a member G is k-minimal iff s <= 2 (no edge can go)
/// and every nonempty X has 2 d(X) - (k-1)|X| >= s (no vertex set can go);
/// G - X is in D_k exactly when that value drops below s.
inline MinimalityReport is_k_minimal(const Graph& g, int k) {
  MinimalityReport rep;
  rep.is_member = in_Dk(g, k);
  rep.slack = dk_slack(g, k);
  if (!rep.is_member) return rep;
  if (rep.slack > 2) {
    rep.removable_edge = g.edges().front();
    return rep;
  }
  auto cert = minimize_deficiency(g, k);
  if (cert.value < rep.slack) {
    rep.removable_set = std::move(cert);
    return rep;
  }
  rep.is_minimal = true;
  return rep;
}

/// A k-minimal subgraph of G; to_parent maps its vertices to ids of G.
///
/// Deletes lexicographically smallest edges while the slack exceeds 2, then
/// deletes a minimizing vertex set while one keeps the graph in D_k.
inline Subgraph minimalize(const Graph& g, int k) {
  ensure(in_Dk(g, k), Errc::NotInDk, "graph is not in D_" + std::to_string(k));
  Subgraph cur{g, {}};
  cur.to_parent.resize(static_cast<std::size_t>(g.order()));
  std::iota(cur.to_parent.begin(), cur.to_parent.end(), 0);
  for (;;) {
    const auto slack = dk_slack(cur.graph, k);
    if (slack > 2) {
      auto edges = cur.graph.edges();
      edges.resize(static_cast<std::size_t>((slack - 1) / 2));
      cur.graph = remove_edges(cur.graph, edges);
      continue;
    }
    auto cert = minimize_deficiency(cur.graph, k);
    if (cert.value >= slack) break;
    Subgraph next = remove_vertices(cur.graph, cert.set);
    for (auto& id : next.to_parent) id = cur.to_parent[id];
    cur = std::move(next);
  }
  return cur;
}

}  // namespace avgdeg
