#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tutte/canonical.hpp"
#include "tutte/closure.hpp"
#include "tutte/random.hpp"
#include "tutte/graph6.hpp"
#include "tutte/krausz.hpp"
#include "tutte/goodwalk.hpp"
#include "tutte/recognition.hpp"

using namespace tutte;
using testsupport::wheel;

TEST_CASE("claw detection") {
  std::array<int, 4> w{};
  CHECK_FALSE(is_claw_free(Graph::star(3), &w));
  CHECK(w == std::array<int, 4>{0, 1, 2, 3});
  CHECK(is_claw_free(Graph::cycle(5)));
  CHECK(is_claw_free(wheel(5)));  // exhaustive scan of all 4-sets
  CHECK_FALSE(is_claw_free(Graph::star(4)));
}

TEST_CASE("claw-freeness matches the generic induced-copy search") {
  Graph claw = Graph::star(3);
  enumerate_graphs(6, [](const Graph&) { return true; }, [&](const Graph& g) {
    CHECK(is_claw_free(g) == !find_induced_copy(g, claw).has_value());
  });
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    Graph g = testsupport::random_graph(rng, rng.below(10), 150 + rng.below(700));
    CHECK(is_claw_free(g) == !find_induced_copy(g, claw).has_value());
  }
}

TEST_CASE("induced copy search") {
  CHECK(find_induced_copy(Graph::complete(4), Graph::complete(3)).has_value());
  CHECK_FALSE(find_induced_copy(Graph::cycle(6), Graph::star(3)).has_value());
  auto p4 = find_induced_copy(Graph::cycle(6), Graph::path(4));
  REQUIRE(p4.has_value());
  // image preserves adjacency and non-adjacency
  Graph h = Graph::path(4);
  Graph g = Graph::cycle(6);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(h.adjacent(i, j) == g.adjacent((*p4)[i], (*p4)[j]));
  // no 5-clique in K_4
  CHECK_FALSE(find_induced_copy(Graph::complete(4), Graph::complete(5)));
}

TEST_CASE("forbidden family derivation") {
  const ForbiddenFamily& fam = forbidden_family();
  REQUIRE(fam.graphs.size() == 7);
  // the claw is the unique four-vertex member
  CHECK(write_graph6(fam.graphs.front()) == write_graph6(canonical_form(Graph::star(3))));
  // enumeration saw the full class counts
  CHECK(fam.graphs_per_order == std::vector<int>{0, 1, 2, 4, 11, 34, 156, 1044});
  Budget b(100'000'000);
  for (const Graph& g : fam.graphs) {
    CHECK(find_krausz_cover(g, 2, b).outcome == SearchOutcome::Absent);
    // minimality: every one-vertex deletion is coverable
    for (int v = 0; v < g.order(); ++v) {
      VertexSet rest(g.vertex_mask() & ~(std::uint64_t{1} << v));
      CHECK(find_krausz_cover(induced_subgraph(g, rest).graph, 2, b).outcome ==
            SearchOutcome::Found);
    }
  }
}

TEST_CASE("derivation from an external class stream") {
  std::vector<Graph> classes;
  enumerate_graphs(7, [](const Graph&) { return true; },
                   [&](const Graph& g) { classes.push_back(g); });
  Budget b(100'000'000);
  ForbiddenFamily fam = derive_forbidden_family_from(classes, b);
  CHECK(fam.graphs.size() == 7);
  // incomplete streams are rejected
  classes.pop_back();
  CHECK_THROWS_AS(derive_forbidden_family_from(classes, b), InputError);
}

TEST_CASE("line graph of multigraph membership, both characterizations") {
  Budget b(100'000'000);
  CHECK(is_line_graph_of_multigraph(Graph::path(3), b));
  CHECK_FALSE(is_line_graph_of_multigraph(Graph::star(3), b));
  CHECK(is_line_graph_of_multigraph(Graph::cycle(5), b));
  CHECK(is_line_graph_of_multigraph(Graph::complete(5), b));
}

TEST_CASE("square of cycle recognition") {
  CHECK(is_square_of_cycle(Graph::cycle_square(7)) == 7);
  CHECK(is_square_of_cycle(Graph::complete(5)) == 5);  // C_5 squared
  CHECK_FALSE(is_square_of_cycle(Graph::path(6)).has_value());
  CHECK(is_square_of_cycle(Graph::cycle_square(6)) == 6);
  CHECK_FALSE(is_square_of_cycle(Graph::complete(6)).has_value());
  CHECK_FALSE(is_square_of_cycle(Graph::cycle(7)).has_value());
  // witness order traces the cycle
  auto order = square_of_cycle_order(Graph::cycle_square(9));
  REQUIRE(order.has_value());
  Graph g = Graph::cycle_square(9);
  for (int i = 0; i < 9; ++i) {
    CHECK(g.adjacent((*order)[i], (*order)[(i + 1) % 9]));
    CHECK(g.adjacent((*order)[i], (*order)[(i + 2) % 9]));
  }
}

TEST_CASE("two-closedness") {
  CHECK(is_2_closed(Graph::complete(6)));
  CHECK(is_2_closed(Graph::cycle(6)));
  int witness = -1;
  CHECK_FALSE(is_2_closed(wheel(5), &witness));
  CHECK(witness == 5);  // the hub; its neighborhood is the 2-connected rim
  CHECK(is_2_closed(Graph::cycle_square(7)));
}

TEST_CASE("only the walk-seed members appear inside 2-closed graphs") {
  const ForbiddenFamily& fam = forbidden_family();
  auto [w1, w2] = goodwalk_graphs();
  std::vector<Graph> excluded;
  for (const Graph& f : fam.graphs)
    if (write_graph6(f) != write_graph6(w1) &&
        write_graph6(f) != write_graph6(w2))
      excluded.push_back(f);
  REQUIRE(excluded.size() == 5);
  Rng rng(23);
  bool seed_member_seen = false;
  for (int t = 0; t < 150; ++t) {
    Graph g = k_closure(random_clawfree_graph(rng, 6 + rng.below(7)), 2).graph;
    for (const Graph& f : excluded) CHECK_FALSE(has_induced_copy(g, f));
    if (has_induced_copy(g, w1) || has_induced_copy(g, w2))
      seed_member_seen = true;
  }
  // the two admissible members do occur in the sample
  CHECK(seed_member_seen);
}
