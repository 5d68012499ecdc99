#include <e6cs/e6cs.hpp>

#include <benchmark/benchmark.h>

using namespace e6cs;

namespace {

const Weight kWeights[] = {{0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}, {1, 1, 0, 0, 0, 1}, {0, 0, 0, 2, 0, 0},
                           {0, 0, 0, 3, 0, 0}};

void BM_Recursion(benchmark::State& state)
{
    const Weight m = kWeights[state.range(0)];
    for (auto _ : state)
        benchmark::DoNotOptimize(character_recursion(m));
    state.SetLabel(format_weight(m));
}
BENCHMARK(BM_Recursion)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Annihilator(benchmark::State& state)
{
    const Weight m = kWeights[state.range(0)];
    for (auto _ : state)
        benchmark::DoNotOptimize(character_annihilator(m));
    state.SetLabel(format_weight(m));
}
BENCHMARK(BM_Annihilator)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

// Includes computing every character below 3*l4 on a cold engine.
void BM_DecomposeZ4CubedCold(benchmark::State& state)
{
    for (auto _ : state) {
        CharacterEngine engine;
        benchmark::DoNotOptimize(monomial_decompose({0, 0, 0, 3, 0, 0}, engine));
    }
}
BENCHMARK(BM_DecomposeZ4CubedCold)->Unit(benchmark::kMillisecond);

void BM_DecomposeZ4CubedWarm(benchmark::State& state)
{
    CharacterEngine engine;
    monomial_decompose({0, 0, 0, 3, 0, 0}, engine);
    for (auto _ : state)
        benchmark::DoNotOptimize(monomial_decompose({0, 0, 0, 3, 0, 0}, engine));
}
BENCHMARK(BM_DecomposeZ4CubedWarm)->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state)
{
    CharacterEngine engine;
    const Polynomial& a = engine.character({0, 0, 0, 2, 0, 0})->poly;
    const Polynomial& b = engine.character({0, 0, 1, 0, 1, 0})->poly;
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Unit(benchmark::kMicrosecond);

void BM_ApplyDelta(benchmark::State& state)
{
    CharacterEngine engine;
    const Polynomial& p = engine.character({0, 0, 0, 3, 0, 0})->poly;
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_delta(p));
}
BENCHMARK(BM_ApplyDelta)->Unit(benchmark::kMicrosecond);

void BM_WeylDimension(benchmark::State& state)
{
    const Weight m{3, 1, 4, 1, 5, 9};
    for (auto _ : state)
        benchmark::DoNotOptimize(weyl_dimension(m));
}
BENCHMARK(BM_WeylDimension);

}  // namespace

BENCHMARK_MAIN();
