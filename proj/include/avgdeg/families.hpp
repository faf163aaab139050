#pragma once

#include <vector>

#include "avgdeg/graph.hpp"

// Small named graphs used by tests, examples and the CLI fixtures.
namespace avgdeg::families {

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

/// Path with `edges` edges on vertices 0..edges.
inline Graph path(int edges) {
  std::vector<Edge> e;
  for (int i = 0; i < edges; ++i) e.emplace_back(i, i + 1);
  return Graph(edges + 1, e);
}

/// K_{1,leaves} with center 0.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

/// Two triangles sharing vertex 0: {0,1,2} and {0,3,4}.
inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

/// Outer cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

/// Centers 0 and 1 adjacent; 0 carries `a` leaves, 1 carries `b` leaves.
inline Graph double_star(int a, int b) {
  std::vector<Edge> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < a; ++i) e.emplace_back(0, next++);
  for (int i = 0; i < b; ++i) e.emplace_back(1, next++);
  return Graph(next, e);
}

}  // namespace avgdeg::families
