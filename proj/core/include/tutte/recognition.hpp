#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "tutte/graph.hpp"

namespace tutte {

// True iff no four vertices induce a star K_{1,3}.  On failure the witness
// holds {center, leaf, leaf, leaf}.
bool is_claw_free(const Graph& g, std::array<int, 4>* witness = nullptr);

// First injection V(h) -> V(g) preserving adjacency and non-adjacency, in
// lexicographic order of the image tuple; h vertices are placed in their
// natural order so witnesses are reproducible.
std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& h);

bool has_induced_copy(const Graph& g, const Graph& h);

// All vertex sets of g inducing a subgraph isomorphic to h.
std::vector<VertexSet> induced_copy_sets(const Graph& g, const Graph& h);

// The minimal graphs that are not line graphs of multigraphs, derived by
// enumerating all graphs on at most 7 vertices and classifying each with
// the rank-2 clique-cover search.  Members are canonical forms sorted by
// (order, edge count, graph6).
struct ForbiddenFamily {
  std::vector<Graph> graphs;
  int enumeration_max_order = 0;
  std::vector<int> graphs_per_order;   // index = order, counts enumerated classes
  std::vector<int> members_per_order;  // index = order, counts family members
};

ForbiddenFamily derive_forbidden_family(Budget& budget);

// Derivation from caller-supplied candidates (e.g. an external graph6
// stream).  The candidates must contain every isomorphism class up to
// 7 vertices; per-order class counts are validated against the known
// sequence 1, 2, 4, 11, 34, 156, 1044.
ForbiddenFamily derive_forbidden_family_from(const std::vector<Graph>& candidates,
                                             Budget& budget);

// Cached family derived on first use.
const ForbiddenFamily& forbidden_family();

nlohmann::json provenance_json(const ForbiddenFamily& fam);

// Decided both by forbidden-family scan and by rank-2 cover search; the two
// verdicts must agree or an InternalInconsistencyError is thrown.
bool is_line_graph_of_multigraph(const Graph& g, Budget& budget);

// The n-vertex input is the square of an n-cycle?  Returns the vertex
// sequence in cycle order when so.
std::optional<std::vector<int>> square_of_cycle_order(const Graph& g);
std::optional<int> is_square_of_cycle(const Graph& g);

// No vertex has a neighborhood that is simultaneously non-complete and
// k-connected.  Witness receives the first offending vertex.
bool is_k_closed(const Graph& g, int k, int* witness = nullptr);
bool is_2_closed(const Graph& g, int* witness = nullptr);

}  // namespace tutte
