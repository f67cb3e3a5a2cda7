#include "tutte/harness.hpp"

#include "tutte/canonical.hpp"
#include "tutte/closure.hpp"
#include "tutte/connectivity.hpp"
#include "tutte/goodwalk.hpp"
#include "tutte/graph6.hpp"
#include "tutte/krausz.hpp"
#include "tutte/paths.hpp"
#include "tutte/random.hpp"
#include "tutte/recognition.hpp"
#include "tutte/theorem.hpp"

namespace tutte {

void for_each_connected_clawfree(int n_max,
                                 const std::function<void(const Graph&)>& emit) {
  enumerate_graphs(n_max, [](const Graph& g) { return is_claw_free(g); },
                   [&](const Graph& g) {
                     if (is_connected(g)) emit(g);
                   });
}

nlohmann::json theorem5_instance(const Graph& g, std::uint64_t budget_limit) {
  nlohmann::json rec;
  rec["input_graph6"] = write_graph6(g);
  Budget budget(budget_limit);
  nlohmann::json verdicts = nlohmann::json::array();
  auto verdict = [&](const char* check, bool ok) {
    verdicts.push_back({{"check", check}, {"ok", ok}});
    return ok;
  };
  try {
    bool tc_before = is_tutte_connected(g, budget);
    ClosureResult cr = tutte_closure(g, budget);
    rec["closure_trace"] = to_json(cr.trace);
    if (cr.trace.terminal == ClosureTerminal::Indeterminate)
      throw BudgetExceededError();
    const Graph& gT = cr.graph;

    bool ok = true;
    ok &= verdict("closure_claw_free", is_claw_free(gT));
    ok &= verdict("replay_reproduces_closure",
                  replay_trace(g, cr.trace) == gT);
    bool tc_after = is_tutte_connected(gT, budget);
    ok &= verdict("tutte_connectedness_preserved", tc_before == tc_after);
    ok &= verdict("complete_iff_tutte_connected",
                  gT.is_complete() == tc_before);

    nlohmann::json cover_report;
    CliqueSystem sys = cover_tutte_closure(gT, budget, &cover_report);
    rec["mode"] = cover_report.value("mode", "");
    if (cover_report.contains("partition"))
      rec["partition"] = cover_report["partition"];
    rec["cover"] = to_json(sys);
    ok &= verdict("cover_rank3_verified", verify_cover(gT, sys, 3));

    Hypergraph h = hypergraph_from_cover(gT, sys);
    rec["hypergraph"] = to_json(h);
    ok &= verdict("hypergraph_rank_le_3", h.rank() <= 3);
    ok &= verdict("line_graph_roundtrip",
                  line_graph_of_hypergraph(h) == gT);

    rec["verdicts"] = verdicts;
    if (!ok) {
      rec["counterexample"] = {{"reason", "verdict failed"},
                               {"graph6", write_graph6(g)}};
      rec["outcome"] = "counterexample";
    } else {
      rec["outcome"] = "verified";
    }
  } catch (const CounterexampleError& e) {
    rec["verdicts"] = verdicts;
    rec["counterexample"] = {{"reason", e.what()}, {"detail", e.detail}};
    rec["outcome"] = "counterexample";
  } catch (const BudgetExceededError&) {
    rec["verdicts"] = verdicts;
    rec["outcome"] = "budget-exceeded";
  }
  return rec;
}

nlohmann::json SweepSummary::to_json() const {
  nlohmann::json out = {{"instances", instances},
                        {"verified", verified},
                        {"counterexamples", counterexamples},
                        {"budget_exceeded", budget_exceeded}};
  if (!first_counterexample.is_null())
    out["first_counterexample"] = first_counterexample;
  return out;
}

SweepSummary theorem5_sweep(
    int n_max, int random_count, int random_n, std::uint64_t seed,
    std::uint64_t budget_limit,
    const std::function<void(const nlohmann::json&)>& per_instance) {
  SweepSummary sum;
  auto run = [&](const Graph& g) {
    if (!sum.first_counterexample.is_null()) return;
    nlohmann::json rec = theorem5_instance(g, budget_limit);
    sum.instances++;
    const std::string outcome = rec["outcome"];
    if (outcome == "verified") sum.verified++;
    if (outcome == "budget-exceeded") sum.budget_exceeded++;
    if (outcome == "counterexample") {
      sum.counterexamples++;
      sum.first_counterexample = rec;
    }
    if (per_instance) per_instance(rec);
  };
  for_each_connected_clawfree(n_max, run);
  if (random_count > 0) {
    Rng rng(seed);
    for (int i = 0; i < random_count; ++i)
      run(random_connected_clawfree_graph(rng, random_n));
  }
  return sum;
}

nlohmann::json completion_preserves_clawfree_suite(std::uint64_t seed,
                                                   int count, int n_max) {
  Rng rng(seed);
  long graphs = 0, completions = 0, failures = 0;
  nlohmann::json first_failure;
  for (int i = 0; i < count; ++i) {
    int n = 4 + rng.below(std::max(1, n_max - 3));
    Graph g = random_clawfree_graph(rng, n);
    ++graphs;
    for (int x = 0; x < g.order(); ++x) {
      ++completions;
      std::array<int, 4> claw;
      if (!is_claw_free(local_completion(g, x), &claw)) {
        ++failures;
        if (first_failure.is_null())
          first_failure = {{"graph6", write_graph6(g)},
                           {"vertex", x},
                           {"claw", claw}};
      }
    }
  }
  nlohmann::json out = {{"seed", seed},
                        {"graphs", graphs},
                        {"completions", completions},
                        {"failures", failures}};
  if (!first_failure.is_null()) out["first_failure"] = first_failure;
  return out;
}

nlohmann::json goodwalk_cover_suite(std::uint64_t seed, int count, int n_max,
                                    std::uint64_t budget_limit) {
  Rng rng(seed);
  long graphs = 0, with_walks = 0, forbidden_hits = 0, failures = 0;
  nlohmann::json first_failure;
  auto [w1, w2] = goodwalk_graphs();
  std::vector<Graph> excluded;
  for (const Graph& f : forbidden_family().graphs) {
    std::string s = write_graph6(f);
    if (s != write_graph6(w1) && s != write_graph6(w2)) excluded.push_back(f);
  }
  for (int i = 0; i < count; ++i) {
    int n = 6 + rng.below(std::max(1, n_max - 5));
    Graph g = k_closure(random_clawfree_graph(rng, n), 2).graph;
    ++graphs;
    Budget budget(budget_limit);
    try {
      for (const Graph& f : excluded)
        if (has_induced_copy(g, f)) {
          ++forbidden_hits;
          throw CounterexampleError("excluded family member occurs",
                                    {{"graph6", write_graph6(g)},
                                     {"member", write_graph6(f)}});
        }
      // Walk lemma checks run inside these calls and raise on violation.
      std::vector<GoodWalk> walks = find_good_walks(g, budget);
      if (!walks.empty()) ++with_walks;
      cover_2closed(g, budget);
    } catch (const CounterexampleError& e) {
      ++failures;
      if (first_failure.is_null())
        first_failure = {{"reason", e.what()}, {"detail", e.detail}};
    }
  }
  nlohmann::json out = {{"seed", seed},
                        {"graphs", graphs},
                        {"graphs_with_walks", with_walks},
                        {"excluded_member_hits", forbidden_hits},
                        {"failures", failures}};
  if (!first_failure.is_null()) out["first_failure"] = first_failure;
  return out;
}

nlohmann::json cmaximal_sweep(int n_max, std::uint64_t budget_limit,
                              bool all_cuts) {
  long graphs = 0, triples = 0, classes = 0, lhs_true = 0, discrepancies = 0,
       sensitive = 0;
  nlohmann::json first_discrepancy;
  for_each_connected_clawfree(n_max, [&](const Graph& g) {
    ++graphs;
    for (int x = 0; x < g.order(); ++x) {
      VertexSet nb(g.neighbors(x));
      if (is_complete_within(g, nb)) continue;
      if (!is_k_connected_within(g, nb, 2)) continue;
      for (int a = 0; a < g.order(); ++a) {
        if (a == x) continue;
        for (int b = a + 1; b < g.order(); ++b) {
          if (b == x) continue;
          ++triples;
          Budget budget(budget_limit);
          CMaxReport rep = check_cmaximal(g, a, b, x, budget, all_cuts);
          classes += static_cast<long>(rep.classes.size());
          for (const CMaxClassReport& c : rep.classes)
            if (c.lhs) ++lhs_true;
          if (rep.choice_sensitive) ++sensitive;
          if (!rep.equivalence_ok) {
            ++discrepancies;
            if (first_discrepancy.is_null())
              first_discrepancy = {{"graph6", write_graph6(g)},
                                   {"report", rep.to_json()}};
          }
        }
      }
    }
  });
  nlohmann::json out = {{"graphs", graphs},
                        {"triples", triples},
                        {"path_set_classes", classes},
                        {"lhs_true_classes", lhs_true},
                        {"discrepancies", discrepancies},
                        {"cut_choice_sensitive", sensitive}};
  if (!first_discrepancy.is_null()) out["first_discrepancy"] = first_discrepancy;
  return out;
}

}  // namespace tutte
