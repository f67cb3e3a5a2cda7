// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Usage: acceptance [1-8|all]

#include <array>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tutte/canonical.hpp"
#include "tutte/closure.hpp"
#include "tutte/connectivity.hpp"
#include "tutte/goodwalk.hpp"
#include "tutte/graph6.hpp"
#include "tutte/harness.hpp"
#include "tutte/krausz.hpp"
#include "tutte/paths.hpp"
#include "tutte/random.hpp"
#include "tutte/recognition.hpp"
#include "tutte/theorem.hpp"

using namespace tutte;
using nlohmann::json;

namespace {

bool report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion-%d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  return ok;
}

// 1. Forbidden-family derivation: exactly 7 minimal graphs, all on at most
//    6 vertices, none new at 7; cross-validated against the rank-2 cover
//    oracle on all 1044 seven-vertex classes.
bool criterion1() {
  Budget budget(1'000'000'000);
  ForbiddenFamily fam = derive_forbidden_family(budget);
  bool count_ok = fam.graphs.size() == 7;
  int max_order = 0;
  for (const Graph& g : fam.graphs) max_order = std::max(max_order, g.order());
  bool order_ok = max_order <= 6;
  bool none_at_7 = fam.members_per_order.size() <= 7 ||
                   fam.members_per_order[7] == 0;

  long checked7 = 0, mismatches = 0;
  enumerate_graphs(7, [](const Graph&) { return true; }, [&](const Graph& g) {
    Budget b(1'000'000'000);
    bool coverable = find_krausz_cover(g, 2, b).outcome == SearchOutcome::Found;
    bool family_free = true;
    for (const Graph& f : fam.graphs)
      if (has_induced_copy(g, f)) {
        family_free = false;
        break;
      }
    if (g.order() == 7) ++checked7;
    if (coverable != family_free) ++mismatches;
  });
  bool cross_ok = checked7 == 1044 && mismatches == 0;

  char buf[512];
  std::snprintf(buf, sizeof buf,
                "family derivation: count=%zu (want 7: %s), max order=%d "
                "(want <=6: %s), members at order 7=%d (want 0: %s), "
                "oracle cross-validation on %ld seven-vertex classes: "
                "%ld mismatches",
                fam.graphs.size(), count_ok ? "ok" : "FAIL", max_order,
                order_ok ? "ok" : "FAIL",
                fam.members_per_order.size() > 7 ? fam.members_per_order[7] : 0,
                none_at_7 ? "ok" : "FAIL", checked7, mismatches);
  return report(1, count_ok && order_ok && none_at_7 && cross_ok, buf);
}

// 2. Cover-to-hypergraph roundtrip over every class on at most 7 vertices,
//    ranks 2 and 3, with the stated budget.
bool criterion2() {
  long graphs = 0, covers = 0, failures = 0, indeterminate = 0;
  enumerate_graphs(7, [](const Graph&) { return true; }, [&](const Graph& g) {
    ++graphs;
    for (int r : {2, 3}) {
      Budget b(10'000'000);
      CoverSearchResult res = find_krausz_cover(g, r, b);
      if (res.outcome == SearchOutcome::Indeterminate) {
        ++indeterminate;
        continue;
      }
      if (res.outcome != SearchOutcome::Found) continue;
      ++covers;
      Hypergraph h = hypergraph_from_cover(g, res.system);
      if (h.rank() > r || !(line_graph_of_hypergraph(h) == g)) ++failures;
    }
  });
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "hypergraph roundtrip: %ld classes, %ld covers found, "
                "%ld roundtrip failures, %ld indeterminate",
                graphs, covers, failures, indeterminate);
  return report(2, failures == 0 && indeterminate == 0 && covers > 0, buf);
}

// 3. Local completion preserves claw-freeness on 10,000 seeded random
//    claw-free graphs (n <= 10), every vertex.
bool criterion3() {
  json suite = completion_preserves_clawfree_suite(20250809, 10000, 10);
  long failures = suite["failures"].get<long>();
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "completion preserves claw-freeness: %ld graphs, "
                "%ld completions, %ld failures",
                suite["graphs"].get<long>(), suite["completions"].get<long>(),
                failures);
  return report(3, failures == 0, buf);
}

// 4. Walk lemmas and the 2-closed cover on 1,000 seeded 2-closures
//    (n <= 12): excluded members never occur, every walk check passes, the
//    cover verifies at rank 3 with the only-maximal-cliques condition.
bool criterion4() {
  json suite = goodwalk_cover_suite(20250809, 1000, 12, 100'000'000);
  long failures = suite["failures"].get<long>();
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "2-closed covers: %ld graphs (%ld with walks), %ld excluded-"
                "member hits, %ld failures",
                suite["graphs"].get<long>(),
                suite["graphs_with_walks"].get<long>(),
                suite["excluded_member_hits"].get<long>(), failures);
  return report(4, failures == 0, buf);
}

// 5. Maximal-path equivalence, exhaustive over connected claw-free graphs
//    on at most 7 vertices and all admissible triples.
bool criterion5() {
  json sweep = cmaximal_sweep(7, 10'000'000, false);
  long discrepancies = sweep["discrepancies"].get<long>();
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "path-set equivalence: %ld graphs, %ld triples, %ld classes "
                "(%ld unrealizable), %ld discrepancies",
                sweep["graphs"].get<long>(), sweep["triples"].get<long>(),
                sweep["path_set_classes"].get<long>(),
                sweep["lhs_true_classes"].get<long>(), discrepancies);
  return report(5, discrepancies == 0, buf);
}

SweepSummary closure_sweep(long* preservation_failures,
                           long* cover_failures) {
  return theorem5_sweep(8, 500, 9, 20250809, 10'000'000, [&](const json& rec) {
    for (const auto& v : rec["verdicts"]) {
      if (v["ok"] == true) continue;
      std::string check = v["check"];
      if (check == "tutte_connectedness_preserved" ||
          check == "complete_iff_tutte_connected")
        ++*preservation_failures;
      else
        ++*cover_failures;
    }
  });
}

// 6. Closure covers end to end: exhaustive connected claw-free graphs on at
//    most 8 vertices plus 500 seeded random graphs at n = 9.
bool criterion6() {
  long preservation = 0, cover = 0;
  SweepSummary sum = closure_sweep(&preservation, &cover);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "closure covers: %ld instances, %ld verified, %ld "
                "counterexamples, %ld budget-exceeded",
                sum.instances, sum.verified, sum.counterexamples,
                sum.budget_exceeded);
  return report(6,
                sum.counterexamples == 0 && sum.budget_exceeded == 0 &&
                    sum.instances == sum.verified && cover == 0,
                buf);
}

// 7. Closure preserves Tutte-connectedness over the same family, and the
//    closure is complete exactly when the input is Tutte-connected.
bool criterion7() {
  long preservation = 0, cover = 0;
  SweepSummary sum = closure_sweep(&preservation, &cover);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "closure preservation: %ld instances, %ld preservation "
                "failures",
                sum.instances, preservation);
  return report(7, preservation == 0 && sum.budget_exceeded == 0, buf);
}

// 8. Determinism: identical seeds and flags give byte-identical output.
bool criterion8() {
  auto capture = [](const std::string& args) {
    std::string cmd = std::string(TUTTE_CLI_BIN) + " " + args +
                      " < /dev/null 2>/dev/null";
    std::string out;
    std::FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return std::string("<spawn failure>");
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
      out.append(buf.data(), got);
    pclose(pipe);
    return out;
  };
  const char* runs[] = {
      "random-clawfree --n 9 --count 50 --seed 12345 --connected",
      "verify-theorem5 --nmax 6 --random 20 --random-n 8 --seed 99",
      "verify-lemmas --count-free 200 --count-closed 30 --seed 4242",
  };
  int mismatched = 0;
  for (const char* args : runs) {
    std::string a = capture(args);
    std::string
        b = capture(args);
    if (a.empty() || a != b) ++mismatched;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "determinism: %d of 3 command pairs differ",
                mismatched);
  return report(8, mismatched == 0, buf);
}

}  // namespace

int main(int argc, char** argv) {
  std::string which = argc > 1 ? argv[1] : "all";
  bool (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                          criterion5, criterion6, criterion7, criterion8};
  int failures = 0;
  if (which == "all") {
    for (auto* c : criteria)
      if (!c()) ++failures;
  } else {
    int idx = std::atoi(which.c_str());
    if (idx < 1 || idx > 8) {
      std::fprintf(stderr, "usage: acceptance [1-8|all]\n");
      return 2;
    }
    if (!criteria[idx - 1]()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
