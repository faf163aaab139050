#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "avgdeg/cycles.hpp"
#include "avgdeg/error.hpp"
#include "avgdeg/graph.hpp"
#include "avgdeg/minimality.hpp"

namespace avgdeg {

/// A cycle through `center` plus `leaves` hanging off the center: C_r(l) with
/// r = leaves.size() and l = cycle.size().
struct KeyringWitness {
  Vertex center = 0;
  std::vector<Vertex> cycle;
  std::vector<Vertex> leaves;

  std::size_t edge_count() const noexcept { return cycle.size() + leaves.size(); }
  friend bool operator==(const KeyringWitness&, const KeyringWitness&) = default;
};

inline bool verify_keyring(const Graph& g, const KeyringWitness& w, int k, int r) {
  if (static_cast<long long>(w.leaves.size()) != r) return false;
  if (static_cast<long long>(w.edge_count()) < k) return false;
  if (!verify_cycle(g, CycleWitness{w.cycle}, 3)) return false;
  if (std::find(w.cycle.begin(), w.cycle.end(), w.center) == w.cycle.end()) return false;
  std::unordered_set<Vertex> used(w.cycle.begin(), w.cycle.end());
  for (Vertex leaf : w.leaves) {
    if (leaf < 0 || leaf >= g.order()) return false;
    if (!used.insert(leaf).second) return false;
    if (!g.adjacent(w.center, leaf)) return false;
  }
  return true;
}

/// t_i = |N(u_i) ∩ X| and r_i = |N(u_i) \ X| for each vertex u_i of a cycle with vertex set X.
struct CycleDegreeProfile {
  std::vector<int> inside;
  std::vector<int> outside;

  std::int64_t weight(std::size_t i) const { return inside[i] + 2 * static_cast<std::int64_t>(outside[i]); }
};

inline CycleDegreeProfile cycle_degree_profile(const Graph& g, const CycleWitness& c) {
  std::vector<bool> on_cycle(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : c.vertices) on_cycle[v] = true;
  CycleDegreeProfile prof;
  for (Vertex v : c.vertices) {
    int in = 0;
    for (Vertex w : g.neighbors(v)) in += on_cycle[w] ? 1 : 0;
    prof.inside.push_back(in);
    prof.outside.push_back(g.degree(v) - in);
  }
  return prof;
}

/// Keyring with `t` leaves, center `u0` and cycle length >= `lambda` inside a
/// Hamiltonian graph H, built from the neighbors of u0 along the Hamiltonian cycle.
inline KeyringWitness keyring_from_hamiltonian(const Graph& h, const CycleWitness& ham, Vertex u0, int t, int lambda) {
  using E = Errc;
  ensure(lambda >= 2, E::PreconditionViolation, "lambda must be at least 2, got " + std::to_string(lambda));
  ensure(t >= 1, E::PreconditionViolation, "t must be at least 1, got " + std::to_string(t));
  const int m = h.order();
  ensure(static_cast<int>(ham.length()) == m && verify_cycle(h, ham, 3), E::PreconditionViolation,
         "the given cycle is not a Hamiltonian cycle of H");
  ensure(m >= lambda, E::PreconditionViolation,
         "H has " + std::to_string(m) + " vertices, fewer than lambda = " + std::to_string(lambda));
  auto at = std::find(ham.vertices.begin(), ham.vertices.end(), u0);
  ensure(at != ham.vertices.end(), E::PreconditionViolation, "u0 is not on the Hamiltonian cycle");
  const int required = 2 * t - 1 + std::max(2 * lambda - m - 1, 2);
  ensure(h.degree(u0) >= required, E::PreconditionViolation,
         "degree of u0 is " + std::to_string(h.degree(u0)) + ", need at least " + std::to_string(required));

  // u[i] is the i-th vertex of the cycle when read from u0.
  std::vector<Vertex> u(ham.vertices.size());
  std::rotate_copy(ham.vertices.begin(), at, ham.vertices.end(), u.begin());

  // X_1 = u_2..u_{m-lambda+1}, X_2 = u_{lambda-1}..u_{m-2}. Both are clipped to
  // u_2..u_{m-2}, which only changes anything for lambda = 2.
  const int x1_last = m - lambda + 1;
  const int x2_first = lambda - 1;
  std::vector<int> picked;
  for (int i = 2; i <= m - 2 && static_cast<int>(picked.size()) < 2 * t - 1; ++i) {
    const bool in_x = i <= x1_last || i >= x2_first;
    if (in_x && h.adjacent(u0, u[i])) picked.push_back(i);
  }
  ensure(static_cast<int>(picked.size()) == 2 * t - 1, E::Internal, "fewer than 2t-1 neighbors in X_1 ∪ X_2");

  KeyringWitness w;
  w.center = u0;
  const int it = picked[t - 1];
  if (it <= x1_last) {
    w.leaves.push_back(u[1]);
    for (int j = 0; j < t - 1; ++j) w.leaves.push_back(u[picked[j]]);
    w.cycle.push_back(u0);
    for (int i = it; i < m; ++i) w.cycle.push_back(u[i]);
  } else {
    for (int j = t; j < 2 * t - 1; ++j) w.leaves.push_back(u[picked[j]]);
    w.leaves.push_back(u[m - 1]);
    for (int i = 0; i <= it; ++i) w.cycle.push_back(u[i]);
  }
  ensure(static_cast<int>(w.cycle.size()) >= lambda, E::Internal, "Hamiltonian construction: cycle shorter than lambda");
  ensure(verify_keyring(h, w, 0, t), E::Internal, "Hamiltonian construction produced an invalid keyring");
  return w;
}

struct KeyringOptions {
  bool auto_minimalize = true;
  CycleSearchOptions cycle_search{};
};

/// Keyring with exactly r leaves and at least k edges in a member of D_k, for 1 <= r, 2r <= k-1.
inline KeyringWitness find_keyring(const Graph& g, int k, int r, KeyringOptions opt = {}) {
  ensure(r >= 1 && 2 * static_cast<long long>(r) <= static_cast<long long>(k) - 1, Errc::ROutOfRange,
         "need 1 <= r and 2r <= k-1, got k=" + std::to_string(k) + " r=" + std::to_string(r));
  ensure(in_Dk(g, k), Errc::NotInDk, "graph is not in D_" + std::to_string(k));

  Subgraph work{g, {}};
  if (opt.auto_minimalize) {
    work = minimalize(g, k);
  } else {
    work.to_parent.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) work.to_parent[v] = v;
  }
  const Graph& h = work.graph;

  auto found = find_cycle_at_least(h, k, opt.cycle_search);
  ensure(found.has_value(), Errc::Internal, "no cycle of length >= k in a member of D_k");
  const CycleWitness& cyc = *found;
  const int m = static_cast<int>(cyc.length());
  const auto prof = cycle_degree_profile(h, cyc);

  std::size_t best = 0;
  for (std::size_t i = 1; i < cyc.length(); ++i)
    if (prof.weight(i) > prof.weight(best)) best = i;
  ensure(prof.weight(best) >= k, Errc::NoQualifyingIndex,
         "no cycle vertex has t_i + 2 r_i >= k; the graph is not k-minimal, enable minimalization");

  const Vertex center = cyc.vertices[best];
  std::vector<bool> on_cycle(static_cast<std::size_t>(h.order()), false);
  for (Vertex v : cyc.vertices) on_cycle[v] = true;
  std::vector<Vertex> outside;
  for (Vertex w : h.neighbors(center))
    if (!on_cycle[w]) outside.push_back(w);

  KeyringWitness w;
  w.center = center;
  if (prof.outside[best] >= r) {
    std::rotate_copy(cyc.vertices.begin(), cyc.vertices.begin() + static_cast<std::ptrdiff_t>(best), cyc.vertices.end(),
                     std::back_inserter(w.cycle));
    w.leaves.assign(outside.begin(), outside.begin() + r);
    ensure(m + r >= k + r, Errc::Internal, "outside-leaf branch below k + r edges");
  } else {
    Subgraph sub = induced_subgraph(h, VertexSet(h, cyc.vertices));
    std::vector<Vertex> to_sub(static_cast<std::size_t>(h.order()), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) to_sub[sub.to_parent[i]] = static_cast<Vertex>(i);
    CycleWitness ham;
    for (Vertex v : cyc.vertices) ham.vertices.push_back(to_sub[v]);
    const KeyringWitness inner = keyring_from_hamiltonian(sub.graph, ham, to_sub[center], r - prof.outside[best], k - r + 1);
    for (Vertex v : inner.cycle) w.cycle.push_back(sub.to_parent[v]);
    for (Vertex v : inner.leaves) w.leaves.push_back(sub.to_parent[v]);
    w.leaves.insert(w.leaves.end(), outside.begin(), outside.end());
    ensure(static_cast<int>(w.edge_count()) >= k + 1, Errc::Internal, "Hamiltonian branch below k + 1 edges");
  }

  w.center = work.to_parent[w.center];
  for (auto& v : w.cycle) v = work.to_parent[v];
  for (auto& v : w.leaves) v = work.to_parent[v];
  ensure(verify_keyring(g, w, k, r), Errc::Internal, "constructed keyring failed verification");
  return w;
}

}  // namespace avgdeg
