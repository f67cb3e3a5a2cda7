#pragma once

#include <vector>

#include "tutte/graph.hpp"

namespace tutte {

// Convention: connectivity of K_m is m-1, of a one-vertex or disconnected
// graph 0.  Decided by direct subset enumeration, which is exact and fast
// at the orders this library targets.
int vertex_connectivity(const Graph& g);

bool is_k_connected(const Graph& g, int k);

// All vertex sets of exactly `size` whose removal disconnects g, in
// lexicographic order of their sorted member lists.  Complete input is an
// error (no cut exists at any size).
std::vector<VertexSet> minimum_vertex_cuts(const Graph& g, int size);

// Same predicates on the subgraph induced by `within`, without relabeling.
int vertex_connectivity_within(const Graph& g, VertexSet within);
bool is_k_connected_within(const Graph& g, VertexSet within, int k);
bool is_complete_within(const Graph& g, VertexSet within);

// set is a cut of the induced subgraph: contained in it, and removal
// disconnects what remains.
bool is_cut_within(const Graph& g, VertexSet within, VertexSet cut);

}  // namespace tutte
