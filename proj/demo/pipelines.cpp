// Walks through the library on a few small digraphs: degree measures,
// pattern checks, the coloring pipelines and the exact oracle.

#include <iostream>

#include "dicolor/dicolor.hpp"

using namespace dicolor;

namespace {

void show(const char* label, const Digraph& d, const Coloring& c, std::size_t m,
          std::int64_t bound) {
  std::cout << "  " << label << ": " << c.num_colors << " colors (bound " << bound << "), "
            << (verify_coloring(d, c, m).valid ? "verified" : "INVALID") << '\n';
}

}  // namespace

int main() {
  // A tournament where every vertex has 10 out- and 10 in-neighbours.
  Digraph t = rotational_tournament(21);
  HalfInt delta_bar = max_avg_degree(t);
  std::cout << "R21: deltabar = " << delta_bar << '\n';
  show("greedy   ", t, greedy_coloring(t, 1), 1, greedy_bound(delta_bar, 1));
  auto frac = fracdelta_coloring(t, 1);
  show("fracdelta", t, frac.coloring, 1, frac.plan.bound);
  show("bounded  ", t, bounded_coloring(t, 1, 10), 1, 10);

  // Functional digraphs avoid all four patterns, so the acyclic pipeline applies.
  Digraph f = random_functional(60, 2024);
  std::cout << "functional(60): deltabar = " << max_avg_degree(f)
            << ", avoids F: " << std::boolalpha << avoids_F(f) << ", avoids G: " << avoids_G(f)
            << '\n';
  SearchTrace trace;
  auto improved = improved_acyclic_coloring(f, &trace);
  show("improved ", f, improved.coloring, 1, improved.plan.bound);
  std::cout << "  local search: " << trace.improve_moves << " improving moves, "
            << trace.brooks_moves << " cycle-breaking moves\n";

  // The tournament on five vertices contains G2, which the pipeline refuses.
  try {
    improved_acyclic_coloring(rotational_tournament(5));
  } catch (const PatternViolation& e) {
    std::cout << "R5: " << e.what() << '\n';
  }

  // Exact values on small inputs.
  for (std::size_t n : {5, 7, 9}) {
    Digraph r = rotational_tournament(n);
    std::cout << "R" << n << ": chi_1 = " << exact_chi_m(r, 1).chi
              << ", chi_2 = " << exact_chi_m(r, 2).chi << '\n';
  }
}
