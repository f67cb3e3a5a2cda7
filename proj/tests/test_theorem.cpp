#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tutte/closure.hpp"
#include "tutte/connectivity.hpp"
#include "tutte/graph6.hpp"
#include "tutte/harness.hpp"
#include "tutte/krausz.hpp"
#include "tutte/paths.hpp"
#include "tutte/recognition.hpp"
#include "tutte/theorem.hpp"

using namespace tutte;
using testsupport::wheel;

// Two eight-vertex claw-free graphs where completing at x = 3 creates a
// maximal path class with no realization before completing; found by an
// exhaustive scan and frozen here.  On both, every partition claim holds.
namespace {
struct BranchCase {
  const char* g6;
  int a, b, x;
  // whether the side condition depends on which minimum cut plays R
  bool cut_sensitive;
};
constexpr BranchCase kBranchCases[] = {{"GzKWYg", 1, 5, 3, true},
                                       {"G~LYHO", 1, 2, 3, false}};
}  // namespace

TEST_CASE("vx profile classes") {
  // wheel: path inside the rim, classified against the hub
  Graph w = wheel(5);
  const int hub = 5;
  VxProfile prof = vx_profile(w, hub, std::vector<int>{0, 1, 2});
  CHECK(prof.v2.to_vector() == std::vector<int>{1});
  CHECK(prof.v1.to_vector() == std::vector<int>{0, 2});
  CHECK(prof.v0.empty());
  CHECK(prof.a_first == 0);
  CHECK(prof.b_last == 2);

  // path avoiding the neighborhood entirely
  Graph p5 = Graph::path(5);
  VxProfile off = vx_profile(p5, 0, std::vector<int>{3, 4});
  CHECK(off.v0.empty());
  CHECK(off.v1.empty());
  CHECK(off.v2.empty());
  CHECK_FALSE(off.a_first.has_value());

  // rim path through the hub: hub is skipped, rim vertices count hub edges
  VxProfile through = vx_profile(w, hub, std::vector<int>{0, 5, 2});
  CHECK(through.v1.to_vector() == std::vector<int>{0, 2});

  CHECK_THROWS_AS(vx_profile(w, hub, std::vector<int>{0, 0}), InputError);
}

TEST_CASE("equivalence checker preconditions") {
  Budget b;
  CHECK_THROWS_AS(check_cmaximal(Graph::star(3), 1, 2, 0, b), InputError);
  CHECK_THROWS_AS(check_cmaximal(Graph::complete(5), 0, 1, 2, b), InputError);
  CHECK_THROWS_AS(check_cmaximal(wheel(5), 0, 0, 5, b), InputError);
  // path neighborhood is connected but not 2-connected
  CHECK_THROWS_AS(check_cmaximal(Graph::path(4), 0, 3, 1, b), InputError);
}

TEST_CASE("equivalence holds exhaustively at small order") {
  nlohmann::json sweep = cmaximal_sweep(6, 10'000'000, true);
  CHECK(sweep["discrepancies"] == 0);
  CHECK(sweep["cut_choice_sensitive"] == 0);
  CHECK(sweep["graphs"].get<long>() > 50);
  CHECK(sweep["triples"].get<long>() > 300);
}

TEST_CASE("completion can create unrealizable maximal path classes") {
  for (const BranchCase& c : kBranchCases) {
    Graph g = parse_graph6(c.g6);
    Budget b(100'000'000);
    CMaxReport rep = check_cmaximal(g, c.a, c.b, c.x, b, true);
    CHECK(rep.equivalence_ok);
    // The diagnostic reports R-dependence instead of asserting invariance.
    CHECK(rep.choice_sensitive == c.cut_sensitive);
    long lhs_true = 0;
    for (const CMaxClassReport& cls : rep.classes)
      if (cls.lhs) {
        ++lhs_true;
        CHECK(cls.rhs);
        CHECK(cls.endpoints_consistent);
        CHECK(cls.endpoint_edges);
      }
    CHECK(lhs_true == 1);
    CHECK(rep.ab_cut);
  }
}

TEST_CASE("path rerouting clears v0 interiors and keeps the vertex set") {
  for (const BranchCase& c : kBranchCases) {
    Graph g = parse_graph6(c.g6);
    Budget b(100'000'000);
    std::vector<int> p = choose_tutte_path_avoiding_v0(g, c.x, c.a, c.b, b);
    CHECK(p.front() == c.a);
    CHECK(p.back() == c.b);
    Graph gs = local_completion(g, c.x);
    CHECK(is_tutte_path(gs, p));
    CHECK(is_maximal_ab_path(gs, p, b));
    VxProfile prof = vx_profile(g, c.x, p);
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      CHECK_FALSE(prof.v0.contains(p[i]));
  }
  // a pair with no maximal Tutte path in the completion is rejected
  Budget b;
  Graph two = testsupport::disjoint_union(Graph::complete(3), Graph::complete(3));
  CHECK_THROWS_AS(choose_tutte_path_avoiding_v0(two, 0, 1, 4, b), InputError);
}

TEST_CASE("partition claims verify on the frozen instances") {
  for (const BranchCase& c : kBranchCases) {
    Graph g = parse_graph6(c.g6);
    Budget b(100'000'000);
    std::vector<int> p = choose_tutte_path_avoiding_v0(g, c.x, c.a, c.b, b);
    AbcPartition part = abc_partition(g, c.x, c.a, c.b, p, b);
    CHECK(part.C_prime.size() == 2);  // exactly {a', b'}
    CHECK(part.C_prime.contains(part.a_prime));
    CHECK(part.C_prime.contains(part.b_prime));
    // the partition sets avoid x, a, b
    VertexSet all(part.A.bits | part.B.bits | part.C.bits |
                  part.C_prime.bits);
    for (int v : {part.x, part.a, part.b}) CHECK_FALSE(all.contains(v));
  }
}

TEST_CASE("partition verification rejects mismatched data") {
  // feeding a path for the wrong pair trips the claim checks
  Graph g = parse_graph6(kBranchCases[0].g6);
  Budget b(100'000'000);
  std::vector<int> p =
      choose_tutte_path_avoiding_v0(g, kBranchCases[0].x, kBranchCases[0].a,
                                    kBranchCases[0].b, b);
  CHECK_THROWS_AS(abc_partition(g, 0, p.front(), p.back(), p, b),
                  CounterexampleError);
}

TEST_CASE("branch-vertex cover construction on the frozen instances") {
  for (const BranchCase& c : kBranchCases) {
    Graph g = parse_graph6(c.g6);
    Budget b(100'000'000);
    nlohmann::json rep;
    CliqueSystem sys = cover_with_completable_vertex(g, c.x, c.a, c.b, b, &rep);
    CHECK(verify_cover(g, sys, 3));
    Hypergraph h = hypergraph_from_cover(g, sys);
    CHECK(h.rank() <= 3);
    CHECK(line_graph_of_hypergraph(h) == g);
  }
}

TEST_CASE("closure covers: complete, disconnected, and small closures") {
  Budget b;
  auto single = cover_tutte_closure(Graph::complete(5), b);
  REQUIRE(single.cliques.size() == 1);
  CHECK(single.cliques[0].size() == 5);

  Graph two = testsupport::disjoint_union(Graph::complete(3), Graph::complete(4));
  nlohmann::json rep;
  auto parts = cover_tutte_closure(two, b, &rep);
  CHECK(rep["mode"] == "disconnected");
  CHECK(parts.cliques.size() == 2);

  // disconnected with a non-complete component is not a closure
  Graph broken = testsupport::disjoint_union(Graph::path(3), Graph::complete(3));
  CHECK_THROWS_AS(cover_tutte_closure(broken, b), InputError);

  // any 2-closed claw-free input is covered, closure or not
  nlohmann::json rep6;
  auto hexagon = cover_tutte_closure(Graph::cycle(6), b, &rep6);
  CHECK(rep6["mode"] == "2closed");
  CHECK(verify_cover(Graph::cycle(6), hexagon, 3));

  // Tutte-connected non-complete non-2-closed inputs are not closures
  CHECK_THROWS_AS(cover_tutte_closure(wheel(5), b), InputError);
  CHECK_THROWS_AS(cover_tutte_closure(Graph::star(3), b), InputError);
}

TEST_CASE("full instance records") {
  nlohmann::json rec = theorem5_instance(Graph::cycle(6), 10'000'000);
  CHECK(rec["outcome"] == "verified");
  CHECK(rec["mode"] == "2closed");
  CHECK(rec["closure_trace"]["terminal"] == "completed-to-K_n");
  for (const auto& v : rec["verdicts"]) CHECK(v["ok"] == true);

  // budget exhaustion surfaces as its own outcome
  nlohmann::json tight = theorem5_instance(Graph::complete(9), 10);
  CHECK(tight["outcome"] == "budget-exceeded");
}

TEST_CASE("in 4-connected line graphs, maximal Tutte paths are Hamilton") {
  long checked = 0;
  for_each_connected_clawfree(7, [&](const Graph& g) {
    if (vertex_connectivity(g) < 4) return;
    Budget b(100'000'000);
    if (!is_line_graph_of_multigraph(g, b)) return;
    for (int a = 0; a < g.order(); ++a)
      for (int bb = a + 1; bb < g.order(); ++bb) {
        if (!g.adjacent(a, bb)) continue;
        auto p = find_maximal_tutte_path(g, a, bb, b);
        REQUIRE(p.has_value());
        CHECK(static_cast<int>(p->size()) == g.order());
        ++checked;
      }
  });
  CHECK(checked > 20);
}

TEST_CASE("closure sweep stays clean at small order") {
  SweepSummary sum = theorem5_sweep(6, 25, 8, 7, 10'000'000);
  CHECK(sum.counterexamples == 0);
  CHECK(sum.budget_exceeded == 0);
  CHECK(sum.instances == sum.verified);
  CHECK(sum.instances > 80);
}
