#include "tutte/closure.hpp"

#include <unordered_map>

#include "tutte/connectivity.hpp"
#include "tutte/graph6.hpp"
#include "tutte/paths.hpp"

namespace tutte {

ClosureResult k_closure(const Graph& g, int k) {
  if (k < 1) throw InputError("closure parameter must be positive");
  ClosureResult res{g, {ClosureMode::KClosure, k, {}, ClosureTerminal::Fixpoint}};
  bool progress = true;
  while (progress) {
    progress = false;
    for (int x = 0; x < res.graph.order(); ++x) {
      VertexSet nb(res.graph.neighbors(x));
      if (is_complete_within(res.graph, nb)) continue;
      if (!is_k_connected_within(res.graph, nb, k)) continue;
      Graph next = local_completion(res.graph, x);
      res.trace.steps.push_back({x, res.graph.edge_count(), next.edge_count()});
      res.graph = next;
      progress = true;
      break;
    }
  }
  return res;
}

namespace {

ClosureResult tutte_closure_impl(const Graph& g, Budget& budget,
                                 bool require_2conn) {
  ClosureResult res{g,
                    {require_2conn ? ClosureMode::Tutte2Conn : ClosureMode::Tutte,
                     0,
                     {},
                     ClosureTerminal::Fixpoint}};
  // One Tutte-connectedness decision per candidate step is the dominant
  // cost; intermediate graphs repeat across scans, so memoize per graph.
  std::unordered_map<std::string, bool> memo;
  auto tutte_connected = [&](const Graph& h) {
    std::string key = write_graph6(h);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool tc = is_tutte_connected(h, budget);
    memo.emplace(std::move(key), tc);
    return tc;
  };

  try {
    if (tutte_connected(g)) {
      res.graph = Graph::complete(g.order());
      res.trace.terminal = ClosureTerminal::CompletedToComplete;
      return res;
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (int x = 0; x < res.graph.order(); ++x) {
        VertexSet nb(res.graph.neighbors(x));
        if (is_complete_within(res.graph, nb)) continue;  // no-op step
        if (require_2conn && !is_k_connected_within(res.graph, nb, 2)) continue;
        Graph next = local_completion(res.graph, x);
        if (tutte_connected(next)) continue;
        res.trace.steps.push_back({x, res.graph.edge_count(), next.edge_count()});
        res.graph = next;
        progress = true;
        break;
      }
    }
  } catch (const BudgetExceededError&) {
    res.trace.terminal = ClosureTerminal::Indeterminate;
  }
  return res;
}

}  // namespace

ClosureResult tutte_closure(const Graph& g, Budget& budget) {
  return tutte_closure_impl(g, budget, false);
}

ClosureResult tutte_closure_2conn(const Graph& g, Budget& budget) {
  return tutte_closure_impl(g, budget, true);
}

Graph replay_trace(const Graph& input, const ClosureTrace& trace) {
  Graph g = input;
  for (const ClosureStep& step : trace.steps) {
    if (g.edge_count() != step.edges_before)
      throw InputError("trace does not match the input graph");
    g = local_completion(g, step.vertex);
    if (g.edge_count() != step.edges_after)
      throw InputError("trace step does not reproduce the recorded edge count");
  }
  if (trace.terminal == ClosureTerminal::CompletedToComplete)
    return Graph::complete(g.order());
  return g;
}

std::string to_string(ClosureMode mode) {
  switch (mode) {
    case ClosureMode::KClosure: return "k-closure";
    case ClosureMode::Tutte: return "tutte";
    case ClosureMode::Tutte2Conn: return "tutte-2conn-variant";
  }
  return "?";
}

std::string to_string(ClosureTerminal t) {
  switch (t) {
    case ClosureTerminal::Fixpoint: return "fixpoint";
    case ClosureTerminal::CompletedToComplete: return "completed-to-K_n";
    case ClosureTerminal::Indeterminate: return "indeterminate";
  }
  return "?";
}

nlohmann::json to_json(const ClosureTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const ClosureStep& s : trace.steps)
    steps.push_back({{"vertex", s.vertex},
                     {"edges_before", s.edges_before},
                     {"edges_after", s.edges_after}});
  nlohmann::json out = {{"mode", to_string(trace.mode)},
                        {"steps", steps},
                        {"terminal", to_string(trace.terminal)}};
  if (trace.mode == ClosureMode::KClosure) out["k"] = trace.k;
  return out;
}

}  // namespace tutte
