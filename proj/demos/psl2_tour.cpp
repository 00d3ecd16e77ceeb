// Walks a few small q values and prints the degree set, the prime graph, and
// its clique number for PSL(2,q).

#include <iostream>

#include <degraph/degraph.hpp>

int main() {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 13, 29}) {
    degraph::DegreeSet d = degraph::cd_psl2(q);
    degraph::DegreeGraph g = degraph::build_graph(d);
    degraph::MaxClique c = degraph::max_clique(g);

    std::cout << "q = " << q << "\n  degrees:";
    for (std::uint64_t v : d.values()) std::cout << " " << v;
    std::cout << "\n  graph: " << degraph::graph_to_json(g) << "\n  omega: " << c.size
              << ", bound: " << degraph::theorem_a_bound(c.size) << "\n";
  }
  return 0;
}
