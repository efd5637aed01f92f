#include "prismdom/constructions.hpp"
#include "prismdom/eternal.hpp"
#include "prismdom/invariants.hpp"
#include "prismdom/pipeline.hpp"

#include <benchmark/benchmark.h>

using namespace prismdom;

namespace {

void BM_SafeFamilyCycle(benchmark::State& state)
{
    const auto g = cycle_graph(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(safe_family(g, k).count());
}
BENCHMARK(BM_SafeFamilyCycle)->Args({9, 3})->Args({12, 4})->Args({14, 5});

// The k=2 prism at 7 guards: the largest fixed point the refutation needs.
void BM_SafeFamilyPrismK2(benchmark::State& state)
{
    const auto g = prism(build_counterexample(2).G);
    GameLimits limits;
    limits.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(safe_family(g, 7, limits).count());
}
BENCHMARK(BM_SafeFamilyPrismK2)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_MaxCliqueTower(benchmark::State& state)
{
    const auto g = complement(build_tower(static_cast<int>(state.range(0)), 4));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_clique(g).size);
}
BENCHMARK(BM_MaxCliqueTower)->Arg(2)->Arg(3);

void BM_ChromaticTower(benchmark::State& state)
{
    const auto g = build_tower(2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticTower)->Arg(3)->Arg(4);

void BM_CliqueCoverCounterexample(benchmark::State& state)
{
    const auto g = build_counterexample(2).G;
    for (auto _ : state)
        benchmark::DoNotOptimize(clique_cover_number(g).theta);
}
BENCHMARK(BM_CliqueCoverCounterexample);

} // namespace

BENCHMARK_MAIN();
