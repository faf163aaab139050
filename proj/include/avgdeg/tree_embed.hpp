#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "avgdeg/error.hpp"
#include "avgdeg/families.hpp"
#include "avgdeg/graph.hpp"
#include "avgdeg/minimality.hpp"
#include "avgdeg/tree.hpp"

namespace avgdeg {

/// Tree vertex i is sent to host vertex map[i].
struct Embedding {
  std::vector<Vertex> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

inline bool verify_embedding(const Graph& g, const TreeSpec& t, const Embedding& emb) {
  if (static_cast<int>(emb.map.size()) != t.tree.order()) return false;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (Vertex h : emb.map) {
    if (h < 0 || h >= g.order() || used[h]) return false;
    used[h] = true;
  }
  for (const Edge& e : t.tree.edges())
    if (!g.adjacent(emb.map[e.u], emb.map[e.v])) return false;
  return true;
}

/// One leaf move: `moved_leaf` leaves preleaf `v` and joins `u` (a preleaf with
/// the most leaves), turning `before` into `after`.
struct ConcentrationStep {
  TreeSpec before;
  TreeSpec after;
  Vertex u = 0;
  Vertex v = 0;
  Vertex moved_leaf = 0;
};

/// Leaf moves that turn T into a star with k edges; empty when T already is one.
inline std::vector<ConcentrationStep> concentration_sequence(const TreeSpec& t) {
  std::vector<ConcentrationStep> steps;
  TreeSpec cur = t;
  while (!cur.is_star()) {
    ConcentrationStep st;
    st.before = cur;
    st.u = *std::find_if(cur.preleaves.begin(), cur.preleaves.end(),
                         [&](Vertex x) { return cur.leaf_count[x] == cur.max_leaves; });
    st.v = *std::find_if(cur.preleaves.begin(), cur.preleaves.end(), [&](Vertex x) { return x != st.u; });
    const auto& nv = cur.tree.neighbors(st.v);
    st.moved_leaf = *std::find_if(nv.begin(), nv.end(), [&](Vertex x) { return cur.is_leaf(x); });

    auto edges = cur.tree.edges();
    std::replace(edges.begin(), edges.end(), Edge(st.v, st.moved_leaf), Edge(st.u, st.moved_leaf));
    st.after = tree_stats(Graph(cur.tree.order(), edges));
    // m grows by 2 when v drops to a leaf hanging off u.
    ensure(st.after.max_leaves >= cur.max_leaves + 1, Errc::Internal, "leaf move did not raise m(T)");
    ensure(!hypothesis_check(cur) || hypothesis_check(st.after), Errc::Internal, "leaf move broke the hypothesis");
    cur = st.after;
    steps.push_back(std::move(st));
  }
  return steps;
}

/// K_{1,k} with center at the smallest vertex of degree >= k and leaves at its
/// k smallest neighbors. Tree vertex 0 is the center, as in families::star(k).
inline Embedding embed_star(const Graph& g, int k) {
  ensure(in_Dk(g, k), Errc::NotInDk, "graph is not in D_" + std::to_string(k));
  for (Vertex c = 0; c < g.order(); ++c) {
    if (g.degree(c) < k) continue;
    Embedding emb;
    emb.map.push_back(c);
    emb.map.insert(emb.map.end(), g.neighbors(c).begin(), g.neighbors(c).begin() + k);
    return emb;
  }
  throw Error(Errc::Internal, "member of D_k without a vertex of degree k");
}

/// The auxiliary digraph F over host vertices for one de-concentration step.
///
/// A holds the images of the preleaves of T' and of v, B the images of the other
/// leaves of T', C the host vertices outside the image. Arcs a -> x (x in B or C)
/// follow host edges; each b in B has one arc back to the image of its T'-parent.
struct AuxDigraph {
  enum class Part : unsigned char { None, A, B, C };

  std::vector<Part> part;          // per host vertex; None = inner vertex of the image
  std::vector<Vertex> leaf_parent; // per host vertex in B
  std::vector<Vertex> a_part;
  std::vector<Vertex> b_part;
  std::vector<Vertex> c_part;
};

inline AuxDigraph build_aux_digraph(const Graph& g, const TreeSpec& after, const Embedding& emb, Vertex v) {
  AuxDigraph f;
  f.part.assign(static_cast<std::size_t>(g.order()), AuxDigraph::Part::C);
  f.leaf_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex x = 0; x < after.tree.order(); ++x) {
    const Vertex h = emb.map[x];
    if (x == v || after.is_preleaf(x)) {
      f.part[h] = AuxDigraph::Part::A;
    } else if (after.is_leaf(x)) {
      f.part[h] = AuxDigraph::Part::B;
      f.leaf_parent[h] = emb.map[after.tree.neighbors(x).front()];
    } else {
      f.part[h] = AuxDigraph::Part::None;
    }
  }
  for (Vertex h = 0; h < g.order(); ++h) {
    if (f.part[h] == AuxDigraph::Part::A) f.a_part.push_back(h);
    if (f.part[h] == AuxDigraph::Part::B) f.b_part.push_back(h);
    if (f.part[h] == AuxDigraph::Part::C) f.c_part.push_back(h);
  }
  return f;
}

struct DeconcentrationTrace {
  std::vector<Vertex> path;  // a_0 = image(v), b_0, a_1, ... in host ids
  bool reached_outside = false;
  std::vector<Edge> added;
  std::vector<Edge> removed;  // tree edges given up by the flip
  std::optional<Vertex> dropped_leaf;
};

struct DeconcentrationResult {
  Embedding embedding;
  DeconcentrationTrace trace;
};

namespace detail {

inline std::string format_set(const std::vector<Vertex>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

}  // namespace detail

/// Turns an embedding of step.after into one of step.before by an alternating
/// path in F from image(v) to C or to image(u).
///
/// Throws Unreachable when neither is reachable. The message carries the value
/// 2d(X) - (k-1)|X| of the set X of reachable A-vertices and the number of host
/// edges from X to the other A-vertices.
inline DeconcentrationResult deconcentrate_step_traced(const Graph& g, const Embedding& emb,
                                                       const ConcentrationStep& step, int k) {
  using Part = AuxDigraph::Part;
  const AuxDigraph f = build_aux_digraph(g, step.after, emb, step.v);
  const Vertex src = emb.map[step.v];
  const Vertex target_u = emb.map[step.u];

  std::vector<Vertex> pred(static_cast<std::size_t>(g.order()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> queue{src};
  seen[src] = true;
  Vertex hit = -1;
  for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
    const Vertex x = queue[qi];
    if (f.part[x] == Part::A) {
      for (Vertex y : g.neighbors(x)) {
        if (seen[y] || (f.part[y] != Part::B && f.part[y] != Part::C)) continue;
        seen[y] = true;
        pred[y] = x;
        if (f.part[y] == Part::C) {
          hit = y;
          break;
        }
        queue.push_back(y);
      }
    } else {
      const Vertex a = f.leaf_parent[x];
      if (seen[a]) continue;
      seen[a] = true;
      pred[a] = x;
      if (a == target_u) hit = a;
      queue.push_back(a);
    }
  }

  if (hit < 0) {
    std::vector<Vertex> reach;
    for (Vertex a : f.a_part)
      if (seen[a]) reach.push_back(a);
    const VertexSet xs(g, reach);
    // F has no arcs between A-vertices, so host edges from X to the rest of A
    // are invisible to the search. When there are some, X can satisfy 2d(X) > (k-1)|X|.
    int xy_edges = 0;
    for (Vertex a : f.a_part)
      if (!seen[a])
        for (Vertex x : reach) xy_edges += g.adjacent(a, x) ? 1 : 0;
    throw Error(Errc::Unreachable,
                "neither C nor the image of u is reachable from the image of v; reachable A-set " +
                    detail::format_set(reach) + " has 2d(X) - (k-1)|X| = " + std::to_string(deficiency_value(g, k, xs)) +
                    " and " + std::to_string(xy_edges) + " host edges to unreached A-vertices" +
                    (verify_remark1(g, k, xs) ? "" : " (host is not k-minimal)"));
  }

  DeconcentrationTrace tr;
  for (Vertex x = hit; x >= 0; x = pred[x]) tr.path.push_back(x);
  std::reverse(tr.path.begin(), tr.path.end());
  tr.reached_outside = f.part[hit] == Part::C;

  std::vector<Edge> sub;
  for (const Edge& e : step.after.tree.edges()) sub.emplace_back(emb.map[e.u], emb.map[e.v]);
  for (std::size_t i = 0; i + 1 < tr.path.size(); i += 2) {
    tr.added.emplace_back(tr.path[i], tr.path[i + 1]);
    if (i + 2 < tr.path.size()) tr.removed.emplace_back(tr.path[i + 2], tr.path[i + 1]);
  }
  for (const Edge& e : tr.removed) std::erase(sub, e);
  sub.insert(sub.end(), tr.added.begin(), tr.added.end());

  if (tr.reached_outside) {
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : sub) {
      ++deg[e.u];
      ++deg[e.v];
    }
    std::optional<Vertex> drop;
    for (const Edge& e : sub) {
      const Vertex other = e.u == target_u ? e.v : e.v == target_u ? e.u : -1;
      if (other < 0 || deg[other] != 1) continue;
      if (std::find(tr.path.begin(), tr.path.end(), other) != tr.path.end()) continue;
      if (!drop || other < *drop) drop = other;
    }
    ensure(drop.has_value(), Errc::IsomorphismMismatch, "image of u has no surplus leaf to drop");
    tr.dropped_leaf = drop;
    std::erase(sub, Edge(target_u, *drop));
  }

  // Relabel the rewired subgraph and match it against the tree wanted.
  std::vector<Vertex> hosts;
  for (const Edge& e : sub) {
    hosts.push_back(e.u);
    hosts.push_back(e.v);
  }
  std::sort(hosts.begin(), hosts.end());
  hosts.erase(std::unique(hosts.begin(), hosts.end()), hosts.end());
  auto local = [&](Vertex h) { return static_cast<Vertex>(std::lower_bound(hosts.begin(), hosts.end(), h) - hosts.begin()); };
  std::vector<Edge> local_edges;
  for (const Edge& e : sub) local_edges.emplace_back(local(e.u), local(e.v));
  std::sort(local_edges.begin(), local_edges.end());
  const bool simple = std::adjacent_find(local_edges.begin(), local_edges.end()) == local_edges.end();
  ensure(simple && static_cast<int>(local_edges.size()) == k, Errc::IsomorphismMismatch,
         "rewired subgraph does not have k distinct edges");
  const Graph rewired(static_cast<int>(hosts.size()), local_edges);
  auto iso = tree_isomorphism(step.before.tree, rewired);
  ensure(iso.has_value(), Errc::IsomorphismMismatch, "rewired subgraph is not a copy of the target tree");

  DeconcentrationResult out;
  out.trace = std::move(tr);
  for (Vertex x = 0; x < step.before.tree.order(); ++x) out.embedding.map.push_back(hosts[(*iso)[x]]);
  ensure(verify_embedding(g, step.before, out.embedding), Errc::IsomorphismMismatch,
         "de-concentrated embedding failed verification");
  return out;
}

inline Embedding deconcentrate_step(const Graph& g, const Embedding& emb, const ConcentrationStep& step, int k) {
  return deconcentrate_step_traced(g, emb, step, k).embedding;
}

/// Every single leaf move allowed at T (u carries m(T) leaves, v is another
/// preleaf, moved_leaf a leaf of v), smallest ids first. The first entry is the
/// step concentration_sequence takes.
inline std::vector<ConcentrationStep> leaf_moves(const TreeSpec& t) {
  std::vector<ConcentrationStep> out;
  if (t.is_star()) return out;
  for (Vertex u : t.preleaves) {
    if (t.leaf_count[u] != t.max_leaves) continue;
    for (Vertex v : t.preleaves) {
      if (v == u) continue;
      for (Vertex leaf : t.tree.neighbors(v)) {
        if (!t.is_leaf(leaf)) continue;
        auto edges = t.tree.edges();
        std::replace(edges.begin(), edges.end(), Edge(v, leaf), Edge(u, leaf));
        out.push_back({t, tree_stats(Graph(t.tree.order(), edges)), u, v, leaf});
      }
    }
  }
  return out;
}

struct EmbedStats {
  std::uint64_t deconcentrations = 0;  // de-concentration steps attempted
  std::uint64_t unreachable = 0;       // of which found no alternating path
};

struct EmbedOptions {
  bool auto_minimalize = true;
  /// When an alternating path is missing, retry with the other leaf moves and
  /// star copies instead of failing on the first choice.
  bool search_choices = true;
  std::uint64_t max_deconcentrations = 1000000;
  EmbedStats* stats = nullptr;
};

namespace detail {

class EmbedSearch {
 public:
  EmbedSearch(const Graph& g, int k, const EmbedOptions& opt) : g_(g), k_(k), opt_(opt) {}

  // Calls fn on embeddings of t built by star seeding and de-concentration
  // until fn returns true.
  using Sink = std::function<bool(const Embedding&)>;

  bool run(const TreeSpec& t, const Sink& fn) {
    if (t.is_star()) return stars(t, fn);
    auto moves = leaf_moves(t);
    if (!opt_.search_choices) moves.resize(1);
    for (const auto& step : moves) {
      const bool done = run(step.after, [&](const Embedding& inner) {
        ensure(stats_.deconcentrations < opt_.max_deconcentrations, Errc::Unreachable,
               "gave up after " + std::to_string(stats_.deconcentrations) + " de-concentration attempts" +
                   (first_failure_.empty() ? "" : "; first failure: " + first_failure_));
        ++stats_.deconcentrations;
        try {
          return fn(deconcentrate_step(g_, inner, step, k_));
        } catch (const Error& e) {
          if (e.code() != Errc::Unreachable || !opt_.search_choices) throw;
          ++stats_.unreachable;
          if (first_failure_.empty()) first_failure_ = e.what();
          return false;
        }
      });
      if (done) return true;
    }
    return false;
  }

  const EmbedStats& stats() const { return stats_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  // Star copies: each center of degree >= k with each k-subset of its
  // neighbors, in lexicographic order (the first one is embed_star's).
  bool stars(const TreeSpec& t, const Sink& fn) {
    const auto to_star = tree_isomorphism(t.tree, families::star(k_));
    ensure(to_star.has_value(), Errc::Internal, "concentration did not end in a star");
    for (Vertex c = 0; c < g_.order(); ++c) {
      const auto& nb = g_.neighbors(c);
      const int d = static_cast<int>(nb.size());
      if (d < k_) continue;
      std::vector<int> pick(static_cast<std::size_t>(k_));
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        std::vector<Vertex> base{c};
        for (int i : pick) base.push_back(nb[i]);
        Embedding emb;
        for (Vertex x = 0; x < t.tree.order(); ++x) emb.map.push_back(base[(*to_star)[x]]);
        if (fn(emb)) return true;
        if (!opt_.search_choices) return false;
        int i = k_ - 1;
        while (i >= 0 && pick[i] == d - k_ + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k_; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return false;
  }

  const Graph& g_;
  int k_;
  const EmbedOptions& opt_;
  EmbedStats stats_;
  std::string first_failure_;
};

}  // namespace detail

/// Embeds a k-edge tree having a preleaf with at least (k-p-1)/2 leaves into a member of D_k.
///
/// The first attempt follows concentration_sequence and embed_star. A single
/// alternating-path search can fail even on a k-minimal host, so by default
/// the other leaf moves and star copies are tried before giving up.
inline Embedding embed_tree(const Graph& g, const TreeSpec& t, EmbedOptions opt = {}) {
  ensure(hypothesis_check(t), Errc::HypothesisNotSatisfied,
         "tree has m=" + std::to_string(t.max_leaves) + " p=" + std::to_string(t.p) + " k=" + std::to_string(t.k) +
             ", but 2m >= k-p-1 is required");
  const int k = t.k;
  ensure(in_Dk(g, k), Errc::NotInDk, "graph is not in D_" + std::to_string(k));
  Subgraph work;
  if (opt.auto_minimalize) {
    work = minimalize(g, k);
  } else {
    work.graph = g;
    for (Vertex x = 0; x < g.order(); ++x) work.to_parent.push_back(x);
  }

  detail::EmbedSearch search(work.graph, k, opt);
  std::optional<Embedding> found;
  const bool ok = search.run(t, [&](const Embedding& emb) {
    found = emb;
    return true;
  });
  if (opt.stats) *opt.stats = search.stats();
  ensure(ok, Errc::Unreachable,
         "no leaf move order reaches the tree; first failure: " + search.first_failure());

  Embedding emb = *found;
  for (auto& h : emb.map) h = work.to_parent[h];
  ensure(verify_embedding(g, t, emb), Errc::Internal, "final embedding failed verification");
  return emb;
}

}  // namespace avgdeg
