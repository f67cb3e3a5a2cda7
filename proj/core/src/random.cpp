#include "tutte/random.hpp"

#include "tutte/recognition.hpp"

namespace tutte {

Graph random_clawfree_graph(Rng& rng, int n) {
  if (n < 1) throw InputError("graph order must be positive");
  const int density = 150 + rng.below(651);  // per mille, 0.15 .. 0.80
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(density, 1000)) g.add_edge(u, v);
  // Each completion joins the offending leaves, so edges only grow and the
  // loop terminates.
  std::array<int, 4> claw;
  while (!is_claw_free(g, &claw)) g = local_completion(g, claw[0]);
  return g;
}

Graph random_connected_clawfree_graph(Rng& rng, int n) {
  for (;;) {
    Graph g = random_clawfree_graph(rng, n);
    if (is_connected(g)) return g;
  }
}

}  // namespace tutte
