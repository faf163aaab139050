#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"
#include "avgdeg/graph_io.hpp"
#include "avgdeg/keyring.hpp"
#include "avgdeg/minimality.hpp"
#include "avgdeg/tree.hpp"
#include "avgdeg/tree_embed.hpp"

// Brute-force reference implementations. Nothing here calls into the search
// code it is meant to check: subset scans, plain backtracking, subset DP.
namespace avgdeg::oracle {

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return adj;
}

inline std::vector<Vertex> members_of(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace detail

/// Exact minimum of 2 d(X) - (k-1)|X| over all nonempty X by subset scan.
/// Ties go to the smallest |X|, then the lexicographically smallest member list.
inline DeficiencyCertificate brute_min_deficiency(const Graph& g, int k) {
  const int n = g.order();
  ensure(n <= 20, Errc::SizeLimit, "subset scan limited to 20 vertices");
  ensure(n >= 1, Errc::EmptySet, "graph has no vertices");
  const auto adj = detail::adjacency_masks(g);
  std::optional<std::int64_t> best;
  std::vector<Vertex> best_set;
  for (std::uint32_t x = 1; x < (std::uint32_t{1} << n); ++x) {
    std::int64_t degsum = 0;
    std::int64_t inside = 0;
    for (std::uint32_t it = x; it; it &= it - 1) {
      const int v = std::countr_zero(it);
      degsum += std::popcount(adj[v]);
      inside += std::popcount(adj[v] & x);
    }
    const std::int64_t boundary = degsum - inside / 2;
    const std::int64_t value = 2 * boundary - static_cast<std::int64_t>(k - 1) * std::popcount(x);
    auto members = detail::members_of(x);
    const bool better = !best || value < *best ||
                        (value == *best && (members.size() < best_set.size() ||
                                            (members.size() == best_set.size() && members < best_set)));
    if (better) {
      best = value;
      best_set = std::move(members);
    }
  }
  return {VertexSet(g, best_set), *best, k};
}

inline std::optional<DeficiencyCertificate> brute_deficient_set(const Graph& g, int k) {
  if (g.order() == 0) return std::nullopt;
  auto c = brute_min_deficiency(g, k);
  if (c.value > 0) return std::nullopt;
  return c;
}

/// k-minimality straight from the definition: no proper subgraph is in D_k.
/// For each vertex subset the induced subgraph is the densest one it spans, so
/// scanning proper induced subgraphs plus single-edge deletions is exhaustive.
inline bool brute_is_k_minimal(const Graph& g, int k) {
  const int n = g.order();
  ensure(n <= 20, Errc::SizeLimit, "subset scan limited to 20 vertices");
  if (!in_Dk(g, k)) return false;
  if (g.size() >= 1 && 2 * (g.size() - 1) > static_cast<std::int64_t>(k - 1) * n) return false;
  const auto adj = detail::adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    std::int64_t twice_edges = 0;
    for (std::uint32_t it = s; it; it &= it - 1) twice_edges += std::popcount(adj[std::countr_zero(it)] & s);
    if (twice_edges > static_cast<std::int64_t>(k - 1) * std::popcount(s)) return false;
  }
  return true;
}

/// Longest cycle length (0 if acyclic) by Hamiltonian-path DP over subsets.
inline int brute_circumference(const Graph& g) {
  const int n = g.order();
  ensure(n <= 16, Errc::SizeLimit, "circumference DP limited to 16 vertices");
  const auto adj = detail::adjacency_masks(g);
  int best = 0;
  for (int s = 0; s < n; ++s) {
    // Paths starting at s through vertices > s; reach[mask] = possible end vertices.
    const std::uint32_t higher = ((std::uint32_t{1} << n) - 1) & ~((std::uint32_t{2} << s) - 1);
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    reach[std::size_t{1} << s] = std::uint32_t{1} << s;
    for (std::uint32_t mask = std::uint32_t{1} << s; mask < (std::uint32_t{1} << n); ++mask) {
      if (!reach[mask]) continue;
      for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
        const int v = std::countr_zero(ends);
        if (std::popcount(mask) >= 3 && (adj[v] >> s & 1U)) best = std::max(best, std::popcount(mask));
        for (std::uint32_t nx = adj[v] & higher & ~mask; nx; nx &= nx - 1) {
          const int w = std::countr_zero(nx);
          reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
        }
      }
    }
  }
  return best;
}

/// Any keyring C_r(l) with l + r >= k, by enumerating cycles.
inline std::optional<KeyringWitness> brute_find_keyring(const Graph& g, int k, int r) {
  const int n = g.order();
  ensure(n <= 12, Errc::SizeLimit, "keyring search limited to 12 vertices");
  if (r < 0) return std::nullopt;
  std::vector<Vertex> path;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::optional<KeyringWitness> found;

  auto try_cycle = [&]() {
    for (Vertex c : path) {
      std::vector<Vertex> out;
      for (Vertex w : g.neighbors(c))
        if (!on[w]) out.push_back(w);
      if (static_cast<int>(out.size()) < r || static_cast<int>(path.size()) + r < k) continue;
      found = KeyringWitness{c, path, std::vector<Vertex>(out.begin(), out.begin() + r)};
      return true;
    }
    return false;
  };
  std::function<bool(Vertex)> dfs = [&](Vertex cur) {
    if (path.size() >= 3 && g.adjacent(cur, path.front()) && try_cycle()) return true;
    for (Vertex w : g.neighbors(cur)) {
      if (on[w] || w < path.front()) continue;
      on[w] = true;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
      on[w] = false;
    }
    return false;
  };
  for (Vertex s = 0; s < n && !found; ++s) {
    path.assign(1, s);
    on[s] = true;
    dfs(s);
    on[s] = false;
    if (found) break;
  }
  return found;
}

/// Any injective edge-preserving map of T into G, by backtracking in BFS order of T.
inline std::optional<Embedding> brute_embed_tree(const Graph& g, const TreeSpec& t) {
  ensure(t.tree.order() <= 10 && g.order() <= 10, Errc::SizeLimit, "tree embedding search limited to 10 vertices");
  const int tn = t.tree.order();
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(static_cast<std::size_t>(tn), -1);
  std::vector<bool> seen(static_cast<std::size_t>(tn), false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex y : t.tree.neighbors(order[i]))
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = order[i];
        order.push_back(y);
      }
  Embedding emb;
  emb.map.assign(static_cast<std::size_t>(tn), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == order.size()) return true;
    const Vertex x = order[i];
    for (Vertex h = 0; h < g.order(); ++h) {
      if (used[h] || (parent[x] >= 0 && !g.adjacent(emb.map[parent[x]], h))) continue;
      used[h] = true;
      emb.map[x] = h;
      if (place(i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return emb;
}

// ---------------------------------------------------------------------------
// Enumeration.

/// Edge slots {i,j}, i < j, in lexicographic order; bit b of an index selects slot b.
inline std::vector<Edge> edge_slots(int n) {
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  return slots;
}

inline std::uint64_t labeled_graph_count(int n) {
  ensure(n >= 0 && n <= 7, Errc::SizeLimit, "labeled enumeration limited to 7 vertices");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph labeled_graph(int n, std::uint64_t index) {
  const auto slots = edge_slots(n);
  std::vector<Edge> e;
  for (std::size_t b = 0; b < slots.size(); ++b)
    if (index >> b & 1U) e.push_back(slots[b]);
  return Graph(n, e);
}

/// Calls fn(graph, index) for every labeled graph on n vertices with index in [begin, end).
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn, std::uint64_t begin = 0, std::uint64_t end = ~std::uint64_t{0}) {
  end = std::min(end, labeled_graph_count(n));
  const auto slots = edge_slots(n);
  std::vector<Edge> e;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    e.clear();
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (idx >> b & 1U) e.push_back(slots[b]);
    fn(Graph(n, e), idx);
  }
}

/// Reads graph6 records line by line; blank lines are skipped.
class Graph6Stream {
 public:
  explicit Graph6Stream(std::istream& in) : in_(in) {}

  std::optional<Graph> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (avgdeg::detail::trim(line).empty()) continue;
      return decode_graph6(line, line_);
    }
    return std::nullopt;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

/// Every unlabeled tree with `vertices` vertices (>= 2), one representative each,
/// from Prüfer sequences deduplicated by canonical form.
inline std::vector<Graph> all_trees(int vertices) {
  ensure(vertices >= 2 && vertices <= 8, Errc::SizeLimit, "tree enumeration limited to 2..8 vertices");
  std::vector<Graph> out;
  std::vector<std::string> forms;
  if (vertices == 2) return {Graph(2, {{0, 1}})};
  const int len = vertices - 2;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  for (;;) {
    std::vector<int> deg(static_cast<std::size_t>(vertices), 1);
    for (int s : seq) ++deg[s];
    std::vector<Edge> edges;
    for (int s : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, s);
      --deg[leaf];
      --deg[s];
    }
    int a = -1;
    for (int x = 0; x < vertices; ++x)
      if (deg[x] == 1) {
        if (a < 0) {
          a = x;
        } else {
          edges.emplace_back(a, x);
          break;
        }
      }
    Graph t(vertices, edges);
    auto form = canonical_form(t);
    if (std::find(forms.begin(), forms.end(), form) == forms.end()) {
      forms.push_back(std::move(form));
      out.push_back(std::move(t));
    }
    int i = len - 1;
    while (i >= 0 && seq[i] == vertices - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

}  // namespace avgdeg::oracle
