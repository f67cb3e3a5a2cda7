// Command-line front end: graph6 streams in, JSON lines out.
//
// Exit codes: 0 all verified, 1 counterexample found, 2 input error,
// 3 budget exceeded.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
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

namespace {

using nlohmann::json;
using namespace tutte;

struct Options {
  std::string input = "-";
  std::uint64_t budget = Budget::kDefaultLimit;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct LineOutcome {
  std::string text;
  bool counterexample = false;
  bool input_error = false;
  bool budget_exceeded = false;
};

int exit_code(bool counterexample, bool input_error, bool budget_exceeded) {
  if (counterexample) return 1;
  if (input_error) return 2;
  if (budget_exceeded) return 3;
  return 0;
}

std::vector<std::string> read_lines(const std::string& source) {
  std::vector<std::string> lines;
  std::string line;
  if (source == "-") {
    while (std::getline(std::cin, line)) lines.push_back(line);
  } else {
    std::ifstream in(source);
    if (!in) throw InputError("cannot open input file: " + source);
    while (std::getline(in, line)) lines.push_back(line);
  }
  return lines;
}

// Parallel map over input lines with ordered output and a summary record.
int run_stream(const Options& opt,
               const std::function<LineOutcome(const Graph&, Budget&)>& work) {
  std::vector<std::string> lines = read_lines(opt.input);
  std::vector<LineOutcome> results(lines.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= lines.size()) return;
      const std::string& line = lines[i];
      if (line.empty()) {
        results[i].text = "";
        continue;
      }
      LineOutcome out;
      try {
        Graph g = parse_graph6(line);
        Budget budget(opt.budget);
        out = work(g, budget);
      } catch (const CounterexampleError& e) {
        out.counterexample = true;
        out.text = json{{"line", i + 1},
                        {"outcome", "counterexample"},
                        {"error", e.what()},
                        {"detail", e.detail}}
                       .dump();
      } catch (const BudgetExceededError&) {
        out.budget_exceeded = true;
        out.text =
            json{{"line", i + 1}, {"outcome", "budget-exceeded"}}.dump();
      } catch (const InputError& e) {
        out.input_error = true;
        out.text = json{{"line", i + 1},
                        {"outcome", "input-error"},
                        {"error", e.what()}}
                       .dump();
      } catch (const std::exception& e) {
        out.input_error = true;
        out.text = json{{"line", i + 1},
                        {"outcome", "error"},
                        {"error", e.what()}}
                       .dump();
      }
      results[i] = std::move(out);
    }
  };

  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  long counterexamples = 0, input_errors = 0, budget_exceeded = 0, records = 0;
  for (const LineOutcome& r : results) {
    if (r.text.empty()) continue;
    std::puts(r.text.c_str());
    ++records;
    counterexamples += r.counterexample;
    input_errors += r.input_error;
    budget_exceeded += r.budget_exceeded;
  }
  json summary = {{"summary",
                   {{"records", records},
                    {"counterexamples", counterexamples},
                    {"input_errors", input_errors},
                    {"budget_exceeded", budget_exceeded}}}};
  std::puts(summary.dump().c_str());
  return exit_code(counterexamples > 0, input_errors > 0, budget_exceeded > 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Tutte-path, closure, and clique-cover toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--budget", opt.budget, "node-expansion cap per graph")
      ->envname("TUTTE_BUDGET");
  app.add_option("--jobs", opt.jobs, "worker threads over input lines")
      ->envname("TUTTE_JOBS");
  app.add_option("--seed", opt.seed, "seed for randomized subcommands")
      ->envname("TUTTE_SEED");

  auto* claw = app.add_subcommand("check-clawfree",
                                  "claw-freeness with witness, per graph");
  claw->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* closure = app.add_subcommand("closure", "closure operators");
  std::string closure_mode = "tutte";
  closure->add_option("mode", closure_mode,
                      "tutte | k=K | tutte-2conn (default tutte)");
  closure->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* tpath = app.add_subcommand("tutte-path",
                                   "maximal Tutte path between two vertices");
  int arg_a = 0, arg_b = 1;
  tpath->add_option("a", arg_a, "first endpoint")->required();
  tpath->add_option("b", arg_b, "second endpoint")->required();
  tpath->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* tconn = app.add_subcommand("tutte-connected",
                                   "Tutte-connectedness with failing pair");
  tconn->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* krausz = app.add_subcommand("krausz", "bounded clique-cover search");
  int rank = 2;
  krausz->add_option("--rank", rank, "per-vertex membership bound")
      ->required();
  krausz->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* c2c = app.add_subcommand("cover-2closed",
                                 "rank-3 cover of a 2-closed claw-free graph");
  c2c->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* ccl = app.add_subcommand(
      "cover-closure", "Tutte-closure, rank-3 cover, hypergraph roundtrip");
  ccl->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* cmax = app.add_subcommand(
      "cmaximal", "maximal-path equivalence over admissible triples");
  bool all_cuts = false;
  int pin_a = -1, pin_b = -1, pin_x = -1;
  cmax->add_flag("--all-cuts", all_cuts,
                 "re-run the check for every minimum cut");
  cmax->add_option("--a", pin_a, "pin the first endpoint");
  cmax->add_option("--b", pin_b, "pin the second endpoint");
  cmax->add_option("--x", pin_x, "pin the completion vertex");
  cmax->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* derive = app.add_subcommand(
      "derive-forbidden",
      "derive the minimal non-line-graphs of multigraphs");
  bool from_stream = false;
  derive->add_flag("--from-stream", from_stream,
                   "classify caller-supplied graph6 classes instead of "
                   "enumerating internally");
  derive->add_option("input", opt.input, "graph6 file or - for stdin");

  auto* rnd = app.add_subcommand("random-clawfree",
                                 "emit seeded random claw-free graphs");
  int rnd_n = 8, rnd_count = 10;
  bool rnd_connected = false;
  rnd->add_option("--n", rnd_n, "graph order");
  rnd->add_option("--count", rnd_count, "how many graphs");
  rnd->add_flag("--connected", rnd_connected, "restart until connected");

  auto* vt5 = app.add_subcommand("verify-theorem5",
                                 "exhaustive + random closure-cover sweep");
  int nmax = 7, random_count = 0, random_n = 9;
  bool no_instances = false;
  vt5->add_option("--nmax", nmax, "exhaustive bound on the order");
  vt5->add_option("--random", random_count, "extra random graphs");
  vt5->add_option("--random-n", random_n, "order of the random graphs");
  vt5->add_flag("--summary-only", no_instances, "suppress per-instance lines");

  auto* vlm = app.add_subcommand("verify-lemmas",
                                 "completion and walk-cover random suites");
  int count_free = 10000, count_closed = 1000, nmax_free = 10,
      nmax_closed = 12;
  vlm->add_option("--count-free", count_free,
                  "graphs for the completion suite");
  vlm->add_option("--count-closed", count_closed,
                  "graphs for the walk-cover suite");
  vlm->add_option("--nmax", nmax_free, "max order for the completion suite");
  vlm->add_option("--nmax-closed", nmax_closed,
                  "max order for the walk-cover suite");

  auto* vcm = app.add_subcommand(
      "verify-cmaximal", "exhaustive maximal-path equivalence sweep");
  int cm_nmax = 7;
  bool cm_all_cuts = false;
  vcm->add_option("--nmax", cm_nmax, "exhaustive bound on the order");
  vcm->add_flag("--all-cuts", cm_all_cuts, "diagnose cut-choice sensitivity");

  CLI11_PARSE(app, argc, argv);

  try {
    if (opt.budget == 0) throw InputError("budget must be positive");
    if (claw->parsed()) {
      return run_stream(opt, [](const Graph& g, Budget&) {
        std::array<int, 4> w;
        bool ok = is_claw_free(g, &w);
        json rec = {{"graph6", write_graph6(g)}, {"claw_free", ok}};
        if (!ok) rec["witness"] = w;
        return LineOutcome{rec.dump()};
      });
    }

    if (closure->parsed()) {
      int k = 0;
      if (closure_mode.rfind("k=", 0) == 0)
        k = std::stoi(closure_mode.substr(2));
      else if (closure_mode != "tutte" && closure_mode != "tutte-2conn")
        throw InputError("unknown closure mode: " + closure_mode);
      return run_stream(opt, [&, k](const Graph& g, Budget& budget) {
        ClosureResult r = k > 0 ? k_closure(g, k)
                          : closure_mode == "tutte"
                              ? tutte_closure(g, budget)
                              : tutte_closure_2conn(g, budget);
        LineOutcome out;
        out.budget_exceeded =
            r.trace.terminal == ClosureTerminal::Indeterminate;
        out.text = json{{"graph6", write_graph6(g)},
                        {"closure_graph6", write_graph6(r.graph)},
                        {"trace", to_json(r.trace)}}
                       .dump();
        return out;
      });
    }

    if (tpath->parsed()) {
      return run_stream(opt, [&](const Graph& g, Budget& budget) {
        auto p = find_maximal_tutte_path(g, arg_a, arg_b, budget);
        json rec = {{"graph6", write_graph6(g)},
                    {"outcome", p ? "found" : "absent"}};
        if (p) rec["path"] = *p;
        return LineOutcome{rec.dump()};
      });
    }

    if (tconn->parsed()) {
      return run_stream(opt, [](const Graph& g, Budget& budget) {
        std::pair<int, int> failing;
        bool ok = is_tutte_connected(g, budget, &failing);
        json rec = {{"graph6", write_graph6(g)}, {"tutte_connected", ok}};
        if (!ok) rec["failing_pair"] = {failing.first, failing.second};
        if (g.order() <= 1)
          rec["note"] = "graph has no vertex pair; vacuously true";
        return LineOutcome{rec.dump()};
      });
    }

    if (krausz->parsed()) {
      return run_stream(opt, [&](const Graph& g, Budget& budget) {
        CoverSearchResult r = find_krausz_cover(g, rank, budget);
        LineOutcome out;
        json rec = {{"graph6", write_graph6(g)}};
        switch (r.outcome) {
          case SearchOutcome::Found: {
            rec["outcome"] = "found";
            rec["cover"] = to_json(r.system);
            Hypergraph h = hypergraph_from_cover(g, r.system);
            rec["hypergraph"] = to_json(h);
            break;
          }
          case SearchOutcome::Absent:
            rec["outcome"] = "absent";
            break;
          case SearchOutcome::Indeterminate:
            rec["outcome"] = "budget-exceeded";
            out.budget_exceeded = true;
            break;
        }
        out.text = rec.dump();
        return out;
      });
    }

    if (c2c->parsed()) {
      return run_stream(opt, [](const Graph& g, Budget& budget) {
        json audit;
        CliqueSystem sys = cover_2closed(g, budget, &audit);
        json rec = {{"graph6", write_graph6(g)},
                    {"cover", to_json(sys)},
                    {"audit", audit}};
        return LineOutcome{rec.dump()};
      });
    }

    if (ccl->parsed()) {
      return run_stream(opt, [&](const Graph& g, Budget&) {
        nlohmann::json rec = theorem5_instance(g, opt.budget);
        LineOutcome out;
        out.text = rec.dump();
        const std::string outcome = rec["outcome"];
        out.counterexample = outcome == "counterexample";
        out.budget_exceeded = outcome == "budget-exceeded";
        return out;
      });
    }

    if (cmax->parsed()) {
      return run_stream(opt, [&](const Graph& g, Budget& budget) {
        json rec = {{"graph6", write_graph6(g)}};
        LineOutcome out;
        if (pin_a >= 0 || pin_b >= 0 || pin_x >= 0) {
          if (pin_a < 0 || pin_b < 0 || pin_x < 0)
            throw InputError("--a, --b, --x must be pinned together");
          CMaxReport rep =
              check_cmaximal(g, pin_a, pin_b, pin_x, budget, all_cuts);
          rec["report"] = rep.to_json();
          out.counterexample = !rep.equivalence_ok;
        } else {
          long triples = 0, discrepancies = 0, lhs_true = 0;
          json first;
          for (int x = 0; x < g.order(); ++x) {
            VertexSet nb(g.neighbors(x));
            if (is_complete_within(g, nb)) continue;
            if (!is_k_connected_within(g, nb, 2)) continue;
            for (int a = 0; a < g.order(); ++a) {
              if (a == x) continue;
              for (int b = a + 1; b < g.order(); ++b) {
                if (b == x) continue;
                ++triples;
                CMaxReport rep = check_cmaximal(g, a, b, x, budget, all_cuts);
                for (const CMaxClassReport& c : rep.classes)
                  if (c.lhs) ++lhs_true;
                if (!rep.equivalence_ok) {
                  ++discrepancies;
                  if (first.is_null()) first = rep.to_json();
                }
              }
            }
          }
          rec["triples"] = triples;
          rec["lhs_true_classes"] = lhs_true;
          rec["discrepancies"] = discrepancies;
          if (!first.is_null()) rec["first_discrepancy"] = first;
          out.counterexample = discrepancies > 0;
        }
        out.text = rec.dump();
        return out;
      });
    }

    if (derive->parsed()) {
      Budget budget(std::max<std::uint64_t>(opt.budget, 100'000'000));
      ForbiddenFamily fam;
      if (from_stream) {
        std::vector<Graph> classes;
        for (const std::string& line : read_lines(opt.input))
          if (!line.empty()) classes.push_back(parse_graph6(line));
        fam = derive_forbidden_family_from(classes, budget);
      } else {
        fam = derive_forbidden_family(budget);
      }
      for (const Graph& g : fam.graphs) std::puts(write_graph6(g).c_str());
      std::puts(provenance_json(fam).dump().c_str());
      return 0;
    }

    if (rnd->parsed()) {
      Rng rng(opt.seed);
      for (int i = 0; i < rnd_count; ++i) {
        Graph g = rnd_connected ? random_connected_clawfree_graph(rng, rnd_n)
                                : random_clawfree_graph(rng, rnd_n);
        std::puts(write_graph6(g).c_str());
      }
      return 0;
    }

    if (vt5->parsed()) {
      SweepSummary sum = theorem5_sweep(
          nmax, random_count, random_n, opt.seed, opt.budget,
          no_instances
              ? std::function<void(const json&)>()
              : [](const json& rec) { std::puts(rec.dump().c_str()); });
      std::puts(json{{"summary", sum.to_json()}}.dump().c_str());
      return exit_code(sum.counterexamples > 0, false,
                       sum.budget_exceeded > 0);
    }

    if (vlm->parsed()) {
      json free_suite =
          completion_preserves_clawfree_suite(opt.seed, count_free, nmax_free);
      std::puts(json{{"completion_suite", free_suite}}.dump().c_str());
      json walk_suite = goodwalk_cover_suite(opt.seed, count_closed,
                                             nmax_closed, opt.budget);
      std::puts(json{{"walk_cover_suite", walk_suite}}.dump().c_str());
      long failures = free_suite["failures"].get<long>() +
                      walk_suite["failures"].get<long>();
      std::puts(json{{"summary", {{"failures", failures}}}}.dump().c_str());
      return failures > 0 ? 1 : 0;
    }

    if (vcm->parsed()) {
      json sweep = cmaximal_sweep(cm_nmax, opt.budget, cm_all_cuts);
      std::puts(json{{"summary", sweep}}.dump().c_str());
      return sweep["discrepancies"].get<long>() > 0 ? 1 : 0;
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const BudgetExceededError&) {
    std::fprintf(stderr, "budget exceeded\n");
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
