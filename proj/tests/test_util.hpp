#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "avgdeg/graph.hpp"

namespace avgdeg::testutil {

/// G(n, p) with a seeded engine.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Random Hamiltonian graph: a shuffled spanning cycle plus each chord with probability p.
struct HamiltonianGraph {
  Graph graph;
  CycleWitness cycle;
};

inline HamiltonianGraph random_hamiltonian(std::mt19937_64& rng, int m, double p) {
  std::vector<Vertex> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) e.emplace_back(order[i], order[(i + 1) % m]);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Edge c(i, j);
      if (std::find(e.begin(), e.end(), c) == e.end() && coin(rng)) e.push_back(c);
    }
  return {Graph(m, e), CycleWitness{order}};
}

inline bool is_subgraph_via(const Graph& parent, const Graph& child, const std::vector<Vertex>& to_parent) {
  for (const Edge& e : child.edges())
    if (!parent.adjacent(to_parent[e.u], to_parent[e.v])) return false;
  std::vector<Vertex> ids = to_parent;
  std::sort(ids.begin(), ids.end());
  return std::adjacent_find(ids.begin(), ids.end()) == ids.end();
}

}  // namespace avgdeg::testutil
