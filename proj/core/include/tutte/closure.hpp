#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tutte/graph.hpp"

namespace tutte {

enum class ClosureMode { KClosure, Tutte, Tutte2Conn };
enum class ClosureTerminal { Fixpoint, CompletedToComplete, Indeterminate };

struct ClosureStep {
  int vertex;
  int edges_before;
  int edges_after;
};

// The vertex order pins down one closure among the possible ones; replaying
// the steps from the input graph reproduces the output bit-exactly.
struct ClosureTrace {
  ClosureMode mode = ClosureMode::Tutte;
  int k = 0;  // meaningful for KClosure
  std::vector<ClosureStep> steps;
  ClosureTerminal terminal = ClosureTerminal::Fixpoint;
};

struct ClosureResult {
  Graph graph;
  ClosureTrace trace;
};

// Complete at vertices whose neighborhood induces a non-complete
// k-connected graph, scanning ascending and restarting after each step.
ClosureResult k_closure(const Graph& g, int k);

// Tutte-connected inputs jump to the complete graph.  Otherwise complete at
// the first vertex (ascending scan) whose completion leaves the graph not
// Tutte-connected, until no such vertex remains.  Budget exhaustion in an
// embedded connectedness check yields terminal Indeterminate with the trace
// of the steps applied so far.
ClosureResult tutte_closure(const Graph& g, Budget& budget);

// Variant: a completion step additionally requires a 2-connected
// neighborhood.
ClosureResult tutte_closure_2conn(const Graph& g, Budget& budget);

// Applies the recorded steps (and the final jump for CompletedToComplete).
Graph replay_trace(const Graph& input, const ClosureTrace& trace);

std::string to_string(ClosureMode mode);
std::string to_string(ClosureTerminal t);
nlohmann::json to_json(const ClosureTrace& trace);

}  // namespace tutte
