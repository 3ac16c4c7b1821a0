// Compares two realizations of the degree sequence of r+1 disjoint stars K_{1,r}:
// the stars themselves, and a clique K_{r+1} plus r(r+1)/2 disjoint edges.

#include <iostream>
#include <vector>

#include "degseq/degseq.hpp"

int main() {
  for (int r = 2; r <= 4; ++r) {
    std::vector<int> raw(r + 1, r);
    raw.insert(raw.end(), r * (r + 1), 1);
    const auto d = degseq::DegreeSequence::normalize(raw);

    const auto best = degseq::gamma_min_bounded(d);

    const int pairs = r * (r + 1) / 2;
    auto matched = degseq::complete_graph(r + 1).disjoint_union(degseq::Graph(2 * pairs));
    for (int i = 0; i < pairs; ++i) matched.add_edge(r + 1 + 2 * i, r + 2 + 2 * i);

    std::cout << "r=" << r << " slater=" << degseq::slater(d) << " gamma_min=" << best.value
              << " gamma(clique+matching)=" << degseq::domination_number(matched).value << "\n";
  }
}
