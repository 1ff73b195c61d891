#include "fpsl/chains.hpp"
#include "fpsl/eigen.hpp"
#include "fpsl/opcalc.hpp"
#include "fpsl/transforms.hpp"

#include <benchmark/benchmark.h>

using namespace fpsl;

static void BM_Invert(benchmark::State& state)
{
    auto f = random_normalized(1, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(invert(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Invert)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_TransformTInv(benchmark::State& state)
{
    auto f = random_normalized(2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(transform_T_inv(f));
}
BENCHMARK(BM_TransformTInv)->RangeMultiplier(2)->Range(8, 32);

static void BM_QTQ(benchmark::State& state)
{
    auto f = random_normalized(3, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(transform_QTQ(f));
}
BENCHMARK(BM_QTQ)->RangeMultiplier(2)->Range(8, 32);

static void BM_SolvePhi(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_phi(Rat(1, 2), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SolvePhi)->RangeMultiplier(2)->Range(8, 32);

static void BM_NuDynamic(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(nu_by_composition_sum(static_cast<int>(state.range(0)), NuVariant::MultinomialSum));
}
BENCHMARK(BM_NuDynamic)->DenseRange(6, 12, 3);

static void BM_NuEnumerated(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(nu_by_enumeration(static_cast<int>(state.range(0)), NuVariant::MultinomialSum));
}
BENCHMARK(BM_NuEnumerated)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ChainGrid(benchmark::State& state)
{
    auto grid = chain_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Verifier v;
        for (const auto& c : grid)
            verify_chain(v, c);
        benchmark::DoNotOptimize(v.checks().size());
    }
}
BENCHMARK(BM_ChainGrid)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
