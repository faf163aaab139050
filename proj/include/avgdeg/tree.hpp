#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"

namespace avgdeg {

/// A tree with its leaf/preleaf statistics.
///
/// `leaves` are the degree-1 vertices, `preleaves` the vertices adjacent to at
/// least one leaf, and `max_leaves` (m(T)) the largest number of leaves on a
/// single preleaf. For K_2 both ends are leaf and preleaf at once.
struct TreeSpec {
  Graph tree;
  int k = 0;
  std::vector<Vertex> leaves;
  std::vector<Vertex> preleaves;
  std::vector<int> leaf_count;  // leaves adjacent to each vertex
  int p = 0;
  int max_leaves = 0;

  bool is_leaf(Vertex x) const { return tree.degree(x) == 1; }
  bool is_preleaf(Vertex x) const { return leaf_count[x] > 0; }
  bool is_star() const { return max_leaves == k; }
};

inline bool is_tree(const Graph& t) {
  if (t.order() == 0 || t.size() != t.order() - 1) return false;
  std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : t.neighbors(x))
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == t.order();
}

inline TreeSpec tree_stats(const Graph& t) {
  ensure(t.size() >= 1, Errc::NotATree, "tree must have at least one edge");
  ensure(is_tree(t), Errc::NotATree, "graph is disconnected or has a cycle");
  TreeSpec s;
  s.tree = t;
  s.k = static_cast<int>(t.size());
  s.leaf_count.assign(static_cast<std::size_t>(t.order()), 0);
  for (Vertex x = 0; x < t.order(); ++x) {
    if (t.degree(x) != 1) continue;
    s.leaves.push_back(x);
    ++s.leaf_count[t.neighbors(x).front()];
  }
  for (Vertex x = 0; x < t.order(); ++x) {
    if (s.leaf_count[x] == 0) continue;
    s.preleaves.push_back(x);
    s.max_leaves = std::max(s.max_leaves, s.leaf_count[x]);
  }
  s.p = static_cast<int>(s.preleaves.size());
  return s;
}

/// Some preleaf carries at least (k - p - 1)/2 leaves.
inline bool hypothesis_check(const TreeSpec& t) { return 2 * t.max_leaves >= t.k - t.p - 1; }

// ---------------------------------------------------------------------------
// Canonical forms and isomorphisms of unrooted trees (AHU encoding, rooted at
// a centroid).

namespace detail {

struct RootedCodes {
  std::vector<std::string> code;
  std::vector<Vertex> parent;
  std::vector<Vertex> order;  // BFS order from the root
};

inline RootedCodes rooted_codes(const Graph& t, Vertex root) {
  RootedCodes rc;
  const auto n = static_cast<std::size_t>(t.order());
  rc.code.assign(n, {});
  rc.parent.assign(n, -1);
  rc.order.push_back(root);
  for (std::size_t i = 0; i < rc.order.size(); ++i) {
    Vertex x = rc.order[i];
    for (Vertex y : t.neighbors(x))
      if (y != rc.parent[x]) {
        rc.parent[y] = x;
        rc.order.push_back(y);
      }
  }
  for (auto it = rc.order.rbegin(); it != rc.order.rend(); ++it) {
    Vertex x = *it;
    std::vector<std::string> kids;
    for (Vertex y : t.neighbors(x))
      if (y != rc.parent[x]) kids.push_back(rc.code[y]);
    std::sort(kids.begin(), kids.end());
    std::string c = "(";
    for (auto& kc : kids) c += kc;
    c += ')';
    rc.code[x] = std::move(c);
  }
  return rc;
}

}  // namespace detail

/// One or two centroids, in increasing id order.
inline std::vector<Vertex> centroids(const Graph& t) {
  const int n = t.order();
  const auto rc = detail::rooted_codes(t, 0);
  std::vector<int> sub(static_cast<std::size_t>(n), 1);
  for (auto it = rc.order.rbegin(); it != rc.order.rend(); ++it)
    if (rc.parent[*it] >= 0) sub[rc.parent[*it]] += sub[*it];
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n; ++x) {
    int heaviest = n - sub[x];
    for (Vertex y : t.neighbors(x))
      if (y != rc.parent[x]) heaviest = std::max(heaviest, sub[y]);
    if (2 * heaviest <= n) out.push_back(x);
  }
  return out;
}

inline std::string canonical_form(const Graph& t) {
  ensure(is_tree(t), Errc::NotATree, "canonical form needs a tree");
  std::string best;
  for (Vertex c : centroids(t)) {
    auto code = detail::rooted_codes(t, c).code[c];
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

/// A bijection f with {f(a), f(b)} an edge of `to` for every edge {a,b} of `from`.
inline std::optional<std::vector<Vertex>> tree_isomorphism(const Graph& from, const Graph& to) {
  if (from.order() != to.order() || !is_tree(from) || !is_tree(to)) return std::nullopt;
  const Vertex root_from = centroids(from).front();
  const auto a = detail::rooted_codes(from, root_from);
  for (Vertex root_to : centroids(to)) {
    const auto b = detail::rooted_codes(to, root_to);
    if (a.code[root_from] != b.code[root_to]) continue;
    std::vector<Vertex> map(static_cast<std::size_t>(from.order()), -1);
    std::vector<std::pair<Vertex, Vertex>> work{{root_from, root_to}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      map[x] = y;
      std::vector<Vertex> kx;
      std::vector<Vertex> ky;
      for (Vertex c : from.neighbors(x))
        if (c != a.parent[x]) kx.push_back(c);
      for (Vertex c : to.neighbors(y))
        if (c != b.parent[y]) ky.push_back(c);
      std::sort(kx.begin(), kx.end(), [&](Vertex p, Vertex q) { return a.code[p] < a.code[q]; });
      std::sort(ky.begin(), ky.end(), [&](Vertex p, Vertex q) { return b.code[p] < b.code[q]; });
      for (std::size_t i = 0; i < kx.size(); ++i) work.emplace_back(kx[i], ky[i]);
    }
    return map;
  }
  return std::nullopt;
}

}  // namespace avgdeg
