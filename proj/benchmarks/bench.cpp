#include <benchmark/benchmark.h>

#include "tutte/closure.hpp"
#include "tutte/goodwalk.hpp"
#include "tutte/graph6.hpp"
#include "tutte/krausz.hpp"
#include "tutte/paths.hpp"
#include "tutte/random.hpp"
#include "tutte/recognition.hpp"

using namespace tutte;

namespace {

Graph sample_graph(int n) {
  Rng rng(7);
  return random_connected_clawfree_graph(rng, n);
}

void BM_Graph6Roundtrip(benchmark::State& state) {
  Graph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Graph back = parse_graph6(write_graph6(g));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_Graph6Roundtrip)->Arg(8)->Arg(16)->Arg(32);

void BM_ClawFree(benchmark::State& state) {
  Graph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_claw_free(g));
}
BENCHMARK(BM_ClawFree)->Arg(8)->Arg(16)->Arg(32);

void BM_TutteConnected(benchmark::State& state) {
  Graph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Budget b(1'000'000'000);
    benchmark::DoNotOptimize(is_tutte_connected(g, b));
  }
}
BENCHMARK(BM_TutteConnected)->Arg(8)->Arg(10)->Arg(12);

void BM_TutteClosure(benchmark::State& state) {
  Graph g = sample_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Budget b(1'000'000'000);
    benchmark::DoNotOptimize(tutte_closure(g, b));
  }
}
BENCHMARK(BM_TutteClosure)->Arg(8)->Arg(9);

void BM_KrauszRank2(benchmark::State& state) {
  Graph g = goodwalk_graphs().first;  // absent case: the search exhausts
  for (auto _ : state) {
    Budget b(1'000'000'000);
    benchmark::DoNotOptimize(find_krausz_cover(g, 2, b));
  }
}
BENCHMARK(BM_KrauszRank2);

void BM_Cover2Closed(benchmark::State& state) {
  Graph g = Graph::cycle_square(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Budget b(1'000'000'000);
    benchmark::DoNotOptimize(cover_2closed(g, b));
  }
}
BENCHMARK(BM_Cover2Closed)->Arg(9)->Arg(12);

void BM_ForbiddenFamilyDerivation(benchmark::State& state) {
  for (auto _ : state) {
    Budget b(1'000'000'000);
    benchmark::DoNotOptimize(derive_forbidden_family(b));
  }
}
BENCHMARK(BM_ForbiddenFamilyDerivation);

}  // namespace

BENCHMARK_MAIN();
