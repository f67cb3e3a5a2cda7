#pragma once

#include <cstdint>
#include <functional>

#include <nlohmann/json.hpp>

#include "tutte/graph.hpp"

namespace tutte {

// Canonical representatives of connected claw-free graphs up to n_max.
void for_each_connected_clawfree(int n_max,
                                 const std::function<void(const Graph&)>& emit);

// One full Tutte-closure verification: closure, preservation of
// Tutte-connectedness, claw-freeness, rank-3 cover, hypergraph roundtrip.
// The record follows the report schema; "counterexample" is present iff a
// verified guarantee failed, "outcome" is one of verified | counterexample |
// budget-exceeded.
nlohmann::json theorem5_instance(const Graph& g, std::uint64_t budget_limit);

struct SweepSummary {
  long instances = 0;
  long verified = 0;
  long counterexamples = 0;
  long budget_exceeded = 0;
  nlohmann::json first_counterexample;
  nlohmann::json to_json() const;
};

// Exhaustive closure sweep over connected claw-free graphs up to n_max plus
// `random_count` seeded random connected claw-free graphs of order random_n.
// Stops at the first counterexample.
SweepSummary theorem5_sweep(int n_max, int random_count, int random_n,
                            std::uint64_t seed, std::uint64_t budget_limit,
                            const std::function<void(const nlohmann::json&)>&
                                per_instance = nullptr);

// Local completion preserves claw-freeness on seeded random claw-free
// graphs, every vertex.
nlohmann::json completion_preserves_clawfree_suite(std::uint64_t seed,
                                                   int count, int n_max);

// Two-closures of seeded random claw-free graphs: the five non-walk family
// members never occur, every walk lemma check passes, and the 2-closed
// cover verifies at rank 3 with the three-clique condition.
nlohmann::json goodwalk_cover_suite(std::uint64_t seed, int count, int n_max,
                                    std::uint64_t budget_limit);

// Exhaustive maximal-path equivalence sweep over connected claw-free graphs
// up to n_max and all admissible triples.
nlohmann::json cmaximal_sweep(int n_max, std::uint64_t budget_limit,
                              bool all_cuts);

}  // namespace tutte
