// Finds a keyring in the Petersen graph plus two chords and prints the
// intermediate objects: the 4-minimal subgraph, a long cycle, and the witness.
#include <iostream>

#include "avgdeg/cycles.hpp"
#include "avgdeg/families.hpp"
#include "avgdeg/keyring.hpp"
#include "avgdeg/minimality.hpp"
#include "avgdeg/witness.hpp"

int main() {
  using namespace avgdeg;
  auto edges = families::petersen().edges();
  edges.emplace_back(0, 2);
  edges.emplace_back(5, 6);
  const Graph g(10, edges);
  const int k = 4;

  std::cout << "n=" << g.order() << " e=" << g.size() << " in D_" << k << ": " << in_Dk(g, k) << '\n';
  const auto sub = minimalize(g, k);
  std::cout << "4-minimal subgraph: n=" << sub.graph.order() << " e=" << sub.graph.size() << '\n';
  if (auto c = find_cycle_at_least(sub.graph, k)) std::cout << "long cycle (minimal ids): " << format_witness(*c) << '\n';

  const auto w = find_keyring(g, k, 1);
  std::cout << format_witness(w) << "\nverified: " << verify_keyring(g, w, k, 1) << '\n';
}
