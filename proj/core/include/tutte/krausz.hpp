#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "tutte/graph.hpp"

namespace tutte {

// A system of cliques over a host graph: each listed set must induce a
// complete subgraph (not necessarily maximal).  Order is meaningful only
// for reproducibility; cliques are compared as vertex sets.
struct CliqueSystem {
  std::vector<VertexSet> cliques;

  bool contains_set(VertexSet s) const {
    for (const VertexSet& k : cliques)
      if (k == s) return true;
    return false;
  }
};

// Ground set 0..ground_size-1 plus a multiset of nonempty edges; multiple
// identical edges are allowed.  Rank = maximum edge size.
struct Hypergraph {
  int ground_size = 0;
  std::vector<std::vector<int>> edges;

  int rank() const {
    std::size_t r = 0;
    for (const auto& e : edges) r = std::max(r, e.size());
    return static_cast<int>(r);
  }
};

// True iff every clique is complete and nonempty, every edge of g lies in
// some clique, and every vertex lies in at most `rank` cliques.  On failure
// fills `violation` (when given) with the first offending item.
bool verify_cover(const Graph& g, const CliqueSystem& ks, int rank,
                  nlohmann::json* violation = nullptr);

enum class SearchOutcome { Found, Absent, Indeterminate };

struct CoverSearchResult {
  SearchOutcome outcome = SearchOutcome::Absent;
  CliqueSystem system;  // meaningful only when outcome == Found
};

// Exact backtracking search for a clique cover with per-vertex membership
// at most `rank`.  Branches on the lexicographically smallest uncovered
// edge; candidate cliques are every complete set of size >= 2, tried in
// ascending bitmask order, so the first cover found is deterministic.
CoverSearchResult find_krausz_cover(const Graph& g, int rank, Budget& budget);

// One ground point per clique; a vertex's hyperedge is the set of cliques
// containing it.  Vertices in no clique get a private ground point so every
// hyperedge is nonempty.  Identical hyperedges stay identical: their line
// graph vertices are adjacent, which matches g because such vertices share
// a clique.
Hypergraph hypergraph_from_cover(const Graph& g, const CliqueSystem& ks);

// Vertices = edges in multiset order; adjacency = nonempty intersection.
Graph line_graph_of_hypergraph(const Hypergraph& h);

// All maximal cliques of g that contain v, by pivotless Bron-Kerbosch over
// the neighborhood.
std::vector<VertexSet> maximal_cliques_containing(const Graph& g, int v);

// True iff s induces a clique that no vertex of `scope` extends.
bool is_maximal_clique_within(const Graph& g, VertexSet scope, VertexSet s);

nlohmann::json to_json(const CliqueSystem& ks);
nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

}  // namespace tutte
