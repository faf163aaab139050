#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"

namespace avgdeg {

struct CycleSearchOptions {
  int max_vertices = 64;  // search uses 64-bit vertex masks; larger values are clamped
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

// Vertices reachable from `from` inside `allowed` (from itself excluded).
inline Mask reach_within(const std::vector<Mask>& adj, Vertex from, Mask allowed) {
  Mask seen = 0;
  Mask frontier = adj[from] & allowed;
  while (frontier) {
    seen |= frontier;
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & allowed & ~seen;
  }
  return seen;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int need) : need_(std::max(need, 3)) {
    adj_.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) adj_[v] = g.neighbor_mask(v);
  }

  std::optional<CycleWitness> run() {
    const int n = static_cast<int>(adj_.size());
    const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    for (Vertex s = 0; s < n; ++s) {
      // The cycle's smallest vertex is s, so only larger ids may follow.
      const Mask higher = s == 63 ? 0 : all & (~Mask{0} << (s + 1));
      if (std::popcount(higher) + 1 < need_) break;
      start_ = s;
      closing_ = adj_[s] & higher;
      if (std::popcount(closing_) < 2) continue;
      path_.assign(1, s);
      if (extend(s, higher)) return CycleWitness{path_};
    }
    return std::nullopt;
  }

 private:
  bool extend(Vertex cur, Mask free) {
    const int len = static_cast<int>(path_.size());
    if (len >= need_ && (adj_[cur] & bit(start_))) return true;
    const Mask reach = reach_within(adj_, cur, free);
    if (len + std::popcount(reach) < need_) return false;
    if (!(reach & closing_)) return false;
    for (Mask cand = adj_[cur] & free; cand; cand &= cand - 1) {
      const Vertex w = std::countr_zero(cand);
      path_.push_back(w);
      if (extend(w, free & ~bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  int need_;
  Vertex start_ = 0;
  Mask closing_ = 0;
  std::vector<Mask> adj_;
  std::vector<Vertex> path_;
};

}  // namespace detail

/// Some cycle with at least max(k, 3) vertices, by exact pruned depth-first search.
/// Returns the first qualifying cycle found, not necessarily the longest.
inline std::optional<CycleWitness> find_cycle_at_least(const Graph& g, int k, CycleSearchOptions opt = {}) {
  const int limit = std::min(opt.max_vertices, 64);
  ensure(g.order() <= limit, Errc::SizeLimit,
         "cycle search limited to " + std::to_string(limit) + " vertices, graph has " + std::to_string(g.order()));
  if (g.order() < std::max(k, 3)) return std::nullopt;
  return detail::CycleSearch(g, k).run();
}

inline bool verify_cycle(const Graph& g, const CycleWitness& w, int k) {
  const auto& c = w.vertices;
  if (c.size() < 3 || static_cast<long long>(c.size()) < k) return false;
  std::unordered_set<Vertex> seen;
  for (Vertex v : c)
    if (v < 0 || v >= g.order() || !seen.insert(v).second) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

struct PathSearchOptions {
  int max_vertices = 16;
};

/// Edges on a longest simple path, by dynamic programming over vertex subsets.
inline int longest_path_length(const Graph& g, PathSearchOptions opt = {}) {
  const int n = g.order();
  ensure(n <= std::min(opt.max_vertices, 24), Errc::SizeLimit,
         "longest-path search limited to " + std::to_string(std::min(opt.max_vertices, 24)) + " vertices");
  if (n == 0) return 0;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint32_t{1} << w;
  // ends[S] = vertices at which some path covering exactly S can end.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  int best = 0;
  for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    const std::uint32_t e = ends[s];
    if (!e) continue;
    best = std::max(best, std::popcount(s) - 1);
    for (std::uint32_t it = e; it; it &= it - 1) {
      const int v = std::countr_zero(it);
      for (std::uint32_t nx = adj[v] & ~s; nx; nx &= nx - 1) {
        const int w = std::countr_zero(nx);
        ends[s | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  return best;
}

}  // namespace avgdeg
