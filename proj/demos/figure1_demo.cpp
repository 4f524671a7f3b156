// Builds a member of the figure1 family, measures its circumference and
// lists every longest cycle with its chord count.
//
//   figure1_demo [k]

#include <cstdlib>
#include <iostream>

#include "lcchord/cycle_search.hpp"
#include "lcchord/families.hpp"
#include "lcchord/graph6.hpp"

int main(int argc, char** argv) {
  using namespace lcchord;
  const int k = argc > 1 ? std::atoi(argv[1]) : 1;
  const auto fg = gen_family(FamilyId::figure1, k);
  const Graph& g = fg.graph;
  std::cout << "figure1 k=" << k << ": n=" << g.order() << " m=" << g.size() << " graph6=" << emit_graph6(g)
            << "\n";

  const auto all = longest_cycles_all(g);
  std::cout << "circumference " << all.length << ", " << all.cycles.size() << " longest cycle(s)\n";
  for (const Cycle& c : all.cycles)
    std::cout << "  [" << to_string(c) << "] chords=" << chords_of_cycle(g, c).size() << "\n";

  if (fg.meta.designated_cycle) {
    const Cycle& d = *fg.meta.designated_cycle;
    std::cout << "designated cycle length " << d.length() << ", chords " << chords_of_cycle(g, d).size() << "\n";
  }
  return 0;
}
