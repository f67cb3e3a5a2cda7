#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tutte/canonical.hpp"
#include "tutte/closure.hpp"
#include "tutte/paths.hpp"
#include "tutte/recognition.hpp"

using namespace tutte;
using testsupport::wheel;

TEST_CASE("k-closure examples") {
  // hub completion turns the 5-wheel into K_6
  ClosureResult r = k_closure(wheel(5), 2);
  CHECK(r.graph == Graph::complete(6));
  CHECK(r.trace.terminal == ClosureTerminal::Fixpoint);
  REQUIRE_FALSE(r.trace.steps.empty());
  CHECK(r.trace.steps.front().vertex == 5);

  CHECK(k_closure(Graph::cycle(6), 2).graph == Graph::cycle(6));
  for (int k = 1; k <= 3; ++k)
    CHECK(k_closure(Graph::complete(5), k).graph == Graph::complete(5));
  CHECK_THROWS_AS(k_closure(Graph(3), 0), InputError);
}

TEST_CASE("k-closure output is k-closed") {
  Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    Graph g = testsupport::random_graph(rng, 2 + rng.below(9), 300);
    for (int k : {2, 3}) {
      ClosureResult r = k_closure(g, k);
      CHECK(is_k_closed(r.graph, k));
      CHECK(replay_trace(g, r.trace) == r.graph);
    }
  }
}

TEST_CASE("tutte closure short-circuits Tutte-connected inputs") {
  Budget b;
  ClosureResult r = tutte_closure(Graph::cycle(6), b);
  CHECK(r.graph == Graph::complete(6));
  CHECK(r.trace.terminal == ClosureTerminal::CompletedToComplete);
  CHECK(r.trace.steps.empty());
  CHECK(replay_trace(Graph::cycle(6), r.trace) == r.graph);

  ClosureResult rk = tutte_closure(Graph::complete(5), b);
  CHECK(rk.graph == Graph::complete(5));
}

TEST_CASE("tutte closure keeps disconnected graphs at their fixpoint") {
  Budget b;
  Graph two = testsupport::disjoint_union(Graph::complete(3), Graph::complete(3));
  ClosureResult r = tutte_closure(two, b);
  CHECK(r.graph == two);
  CHECK(r.trace.terminal == ClosureTerminal::Fixpoint);
  CHECK(r.trace.steps.empty());
}

TEST_CASE("closure traces replay and step edge counts grow") {
  Rng rng(42);
  Budget b(100'000'000);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_clawfree_graph(rng, 4 + rng.below(5));
    ClosureResult r = tutte_closure(g, b);
    REQUIRE(r.trace.terminal != ClosureTerminal::Indeterminate);
    CHECK(replay_trace(g, r.trace) == r.graph);
    for (const ClosureStep& s : r.trace.steps)
      CHECK(s.edges_after > s.edges_before);
  }
}

TEST_CASE("closure preserves Tutte-connectedness") {
  // exhaustive at small order, random beyond
  enumerate_graphs(6, [](const Graph& g) { return is_claw_free(g); },
                   [](const Graph& g) {
                     if (!is_connected(g)) return;
                     Budget b(100'000'000);
                     bool before = is_tutte_connected(g, b);
                     ClosureResult r = tutte_closure(g, b);
                     CHECK(before == is_tutte_connected(r.graph, b));
                     CHECK(r.graph.is_complete() == before);
                   });
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_connected_clawfree_graph(rng, 8);
    Budget b(100'000'000);
    bool before = is_tutte_connected(g, b);
    ClosureResult r = tutte_closure(g, b);
    CHECK(before == is_tutte_connected(r.graph, b));
    CHECK(r.graph.is_complete() == before);
  }
}

TEST_CASE("local completion preserves bounded star-freeness") {
  // K_{1,k}-free stays K_{1,k}-free under completion, k in {3,4}
  Rng rng(44);
  for (int k : {3, 4}) {
    Graph star = Graph::star(k);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 200; ++t) {
      Graph g = testsupport::random_graph(rng, 4 + rng.below(6), 250 + rng.below(500));
      if (find_induced_copy(g, star)) continue;
      ++checked;
      for (int x = 0; x < g.order(); ++x)
        CHECK_FALSE(find_induced_copy(local_completion(g, x), star).has_value());
    }
    CHECK(checked > 50);
  }
}

TEST_CASE("two-connected variant") {
  Budget b;
  CHECK(tutte_closure_2conn(Graph::complete(6), b).graph == Graph::complete(6));
  // Tutte-connected short-circuit applies before any step
  CHECK(tutte_closure_2conn(Graph::cycle(6), b).graph == Graph::complete(6));
  // a 2-closed claw-free graph that is not Tutte-connected has no admissible
  // vertex at all
  Graph two = testsupport::disjoint_union(Graph::complete(3), Graph::complete(3));
  CHECK(tutte_closure_2conn(two, b).graph == two);
}

TEST_CASE("budget exhaustion reports an indeterminate closure") {
  Budget tiny(5);
  ClosureResult r = tutte_closure(Graph::complete(7), tiny);
  CHECK(r.trace.terminal == ClosureTerminal::Indeterminate);
}
