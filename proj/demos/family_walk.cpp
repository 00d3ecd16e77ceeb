// Finds candidate prime powers up to a limit, packs a compatible family
// greedily, and prints the invariants of the resulting product graph.

#include <iostream>

#include <degraph/degraph.hpp>

int main() {
  const std::uint64_t limit = 1000;
  std::vector<degraph::Signature> candidates = degraph::find_candidates(limit);
  std::vector<degraph::Signature> family = degraph::pack_greedy(candidates);

  std::cout << "candidates up to " << limit << ": " << candidates.size() << "\n"
            << "greedy family size: " << family.size() << "\n";

  degraph::FamilyReport rep = degraph::family_report(family);
  std::cout << "vertices: " << rep.vertex_count << "\nomega: " << rep.clique_number
            << "\nratio: " << rep.ratio_num << "/" << rep.ratio_den
            << "\n|V| <= 2w+1: " << (rep.bound_2w1_holds ? "yes" : "no")
            << "\n|V| <= 3w-4: " << (rep.bound_3w4_holds ? "yes" : "no") << "\n";
  return 0;
}
