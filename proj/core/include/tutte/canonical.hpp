#pragma once

#include <functional>
#include <vector>

#include "tutte/graph.hpp"

namespace tutte {

// Canonical relabeling: the vertex order maximizing the upper-triangle
// adjacency string, found by pruned backtracking.  Exact for the small
// orders used here (intended for n <= 10 or so).
Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Emit one canonical representative of every isomorphism class of graphs
// with 1..n_max vertices that satisfies `keep`.  `keep` must be hereditary
// under vertex deletion (the generator extends kept graphs only).
void enumerate_graphs(int n_max, const std::function<bool(const Graph&)>& keep,
                      const std::function<void(const Graph&)>& emit);

}  // namespace tutte
