#include <benchmark/benchmark.h>

#include <random>

#include "spiderkeep/extraction.hpp"
#include "spiderkeep/generators.hpp"
#include "spiderkeep/oracle.hpp"
#include "spiderkeep/spider.hpp"

using namespace spiderkeep;

static void BM_ExtractSpider_Glue(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    Graph g = glue_cliques(q, q, 2);
    SpiderSpec spec = spec_from_legs({2, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_spider(g, 2, spec));
    }
}
BENCHMARK(BM_ExtractSpider_Glue)->Arg(8)->Arg(10)->Arg(12);

static void BM_ExtractSpider_Random(benchmark::State& state) {
    std::mt19937_64 rng(12345);
    Graph g = random_graph_with_connectivity(static_cast<int>(state.range(0)), 3, 8, rng);
    SpiderSpec spec = spec_from_legs({2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_spider(g, 3, spec));
    }
}
BENCHMARK(BM_ExtractSpider_Random)->Arg(12)->Arg(16);

static void BM_BruteRemoval_Glue(benchmark::State& state) {
    Graph g = glue_cliques(7, 7, 2);
    SpiderSpec spec = spec_from_legs({2, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_spider_removal(g, 2, spec));
    }
}
BENCHMARK(BM_BruteRemoval_Glue);

static void BM_ReduceToTarget_Glue(benchmark::State& state) {
    int q = static_cast<int>(state.range(0));
    Graph g = glue_cliques(q, q, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_to_target(g, 2));
    }
}
BENCHMARK(BM_ReduceToTarget_Glue)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
