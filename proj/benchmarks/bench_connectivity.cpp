#include <benchmark/benchmark.h>

#include "spiderkeep/connectivity.hpp"
#include "spiderkeep/generators.hpp"

using namespace spiderkeep;

static void BM_Kappa_Circulant(benchmark::State& state) {
    Graph g = circulant(static_cast<int>(state.range(0)), {1, 2, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertex_connectivity(g));
    }
}
BENCHMARK(BM_Kappa_Circulant)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

static void BM_Kappa_GlueCliques(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    Graph g = glue_cliques(q, q, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertex_connectivity(g));
    }
}
BENCHMARK(BM_Kappa_GlueCliques)->Arg(8)->Arg(16)->Arg(32);

static void BM_AllMinCuts_Circulant(benchmark::State& state) {
    Graph g = circulant(static_cast<int>(state.range(0)), {1, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_min_cuts(g));
    }
}
BENCHMARK(BM_AllMinCuts_Circulant)->Arg(10)->Arg(12)->Arg(14);

static void BM_Ends_GlueCliques(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    Graph g = glue_cliques(q, q, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_ends(g));
    }
}
BENCHMARK(BM_Ends_GlueCliques)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
