// Embeds every 5-edge tree that has a preleaf with enough leaves into K_6
// minus a perfect matching, replaying the leaf moves from the star.
#include <iostream>

#include "avgdeg/families.hpp"
#include "avgdeg/oracle.hpp"
#include "avgdeg/tree_embed.hpp"
#include "avgdeg/witness.hpp"

int main() {
  using namespace avgdeg;
  const Graph k6 = families::complete(6);
  const Graph host = remove_edges(k6, std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
  for (const Graph& t : oracle::all_trees(6)) {
    const TreeSpec spec = tree_stats(t);
    std::cout << "tree k=" << spec.k << " p=" << spec.p << " m=" << spec.max_leaves;
    if (!hypothesis_check(spec)) {
      std::cout << "  (not covered)\n";
      continue;
    }
    const Embedding emb = embed_tree(host, spec);
    std::cout << "  steps=" << concentration_sequence(spec).size() << "  " << format_witness(emb) << '\n';
  }
}
