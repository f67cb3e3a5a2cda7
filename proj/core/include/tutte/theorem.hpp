#pragma once

#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "tutte/graph.hpp"
#include "tutte/krausz.hpp"

namespace tutte {

// Classification of the path vertices lying in N_g(x) by how many of their
// path neighbors fall inside N_g[x].  The path may live in a completion of
// g; membership is always taken in g itself.
struct VxProfile {
  VertexSet v0, v1, v2;
  std::optional<int> a_first;  // first v1 vertex along the path
  std::optional<int> b_last;   // last v1 vertex along the path
};

VxProfile vx_profile(const Graph& g, int x, std::span<const int> path);

// Per-maximal-vertex-set record of the equivalence check between "the set
// is realizable by an (a,b)-path of g" and the cut-plus-path-properties
// condition evaluated in the completion at x.
struct CMaxClassReport {
  VertexSet set;
  bool lhs = false;  // no (a,b)-path of g realizes the set
  bool rhs = false;
  bool agree = false;
  std::vector<int> failed_properties;  // 1..5 for the first failing path
  int paths_checked = 0;
  bool endpoints_consistent = true;    // property (6), checked when lhs
  bool endpoint_edges = true;          // property (7), checked when lhs
};

struct CMaxReport {
  int a = 0, b = 0, x = 0;
  bool ab_cut = false;
  std::vector<CMaxClassReport> classes;
  bool equivalence_ok = true;
  // Diagnostic mode: whether the per-class verdict depends on which
  // minimum cut plays R.
  bool checked_all_cuts = false;
  bool choice_sensitive = false;
  nlohmann::json to_json() const;
};

// Requires g claw-free and the neighborhood of x 2-connected non-complete;
// a, b, x pairwise distinct.  Every maximal (a,b)-path vertex set of the
// completion at x is tested on both sides of the equivalence.
CMaxReport check_cmaximal(const Graph& g, int a, int b, int x, Budget& budget,
                          bool all_cuts = false);

// A maximal (a,b)-Tutte path of the completion at x whose interior avoids
// the v0 class, produced by repeatedly unhooking a v0 interior vertex and
// reinserting it inside an edge with both ends in N[x].  The vertex set
// never changes, so maximality and the Tutte property survive; both are
// re-verified anyway.
std::vector<int> choose_tutte_path_avoiding_v0(const Graph& gT, int x, int a,
                                               int b, Budget& budget);

struct AbcPartition {
  int x, a, b;
  int a_prime, b_prime;  // first/last v1 vertices on the path
  int a_plus;            // path neighbor of a
  VertexSet A, B, C, C_prime;
  nlohmann::json to_json() const;
};

// Computes the partition and verifies every structural claim it rests on:
// {a,b} cuts the neighborhood of x into exactly two parts, contact
// uniqueness at a' and b', the clique statements, the A/B-versus-C
// separation, the common-neighborhood identity, and uniqueness of x.
// Any failure raises CounterexampleError with replay data.
AbcPartition abc_partition(const Graph& gT, int x, int a, int b,
                           std::span<const int> path, Budget& budget);

// The partition-based cover: a Tutte path of the completion at x is chosen
// and rerouted, the partition claims are verified, the branch cliques
// C+a / C+b / C' (or C+a+b / C') are checked maximal away from x, the
// remainder is covered as a 2-closed graph, and the two systems merge.
CliqueSystem cover_with_completable_vertex(const Graph& gT, int x, int a,
                                           int b, Budget& budget,
                                           nlohmann::json* report = nullptr);

// Rank-3 clique cover of a Tutte-closure: one clique per complete component
// when disconnected, the 2-closed cover when 2-closed, and otherwise the
// partition-based construction around the unique completable vertex.
// `report` (when given) receives the fields of the JSON report schema.
CliqueSystem cover_tutte_closure(const Graph& gT, Budget& budget,
                                 nlohmann::json* report = nullptr);

}  // namespace tutte
