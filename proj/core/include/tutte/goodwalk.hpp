#pragma once

#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tutte/graph.hpp"
#include "tutte/krausz.hpp"

namespace tutte {

// Walk u_0 .. u_{k+1} with k >= 4, distance-2 chords, and every window of
// six consecutive vertices inducing one of the two walk seed graphs.
// Vertices may repeat at distance >= 6 in the sequence (that happens only
// in squares of cycles).
struct GoodWalk {
  std::vector<int> seq;
  int k() const { return static_cast<int>(seq.size()) - 2; }
};

// The two forbidden-family members that admit a good-walk ordering of all
// six vertices and are themselves 2-closed; exactly two members qualify.
std::pair<Graph, Graph> goodwalk_graphs();

// All maximal good walks up to reversal, canonically oriented and sorted.
// Input must be claw-free and 2-closed.  In a square of a cycle every good
// walk extends around the cycle indefinitely, so no maximal one exists and
// the result is empty.
std::vector<GoodWalk> find_good_walks(const Graph& g, Budget& budget);

// Interiors u_1..u_k of the maximal walks, deduplicated up to reversal and
// oriented with the smaller endpoint first.  Verifies that each interior is
// a path and that distinct interiors are vertex-disjoint; any violation is
// a counterexample report.  Input must not be the square of a cycle.
struct InteriorPathSet {
  std::vector<std::vector<int>> paths;
};

InteriorPathSet extract_interior_paths(const Graph& g,
                                       std::span<const GoodWalk> walks);

// N[u_1] \ {u_3} and N[u_k] \ {u_{k-2}} for an interior path; both are
// verified to induce cliques and to equal the matching neighborhood form
// at the second vertex from each end.
std::pair<VertexSet, VertexSet> end_cliques(const Graph& g,
                                            std::span<const int> path);

// Clique cover of a 2-closed claw-free graph with every vertex in at most
// three cliques, built per component: a single clique when complete,
// consecutive triangles when the square of a cycle, and otherwise the
// walk-based construction (delete path interiors, cover the rest at rank 2,
// swap end cliques in, add path triangles).  Every internal guarantee is
// verified; failures raise CounterexampleError.
CliqueSystem cover_2closed(const Graph& g, Budget& budget,
                           nlohmann::json* audit = nullptr);

}  // namespace tutte
