#include <benchmark/benchmark.h>

#include <random>

#include "goldsieve/contfrac.hpp"
#include "goldsieve/double_sieve.hpp"
#include "goldsieve/golden.hpp"
#include "goldsieve/hiccup.hpp"
#include "goldsieve/rank_transform.hpp"
#include "goldsieve/surd.hpp"
#include "goldsieve/working_set.hpp"

using goldsieve::GroundSequence;
using goldsieve::Int;

static void WorkingSetChurn(benchmark::State& state) {
    const Int n = state.range(0);
    for (auto _ : state) {
        goldsieve::WorkingSet ws;
        std::mt19937_64 rng(20260814u);
        Int alive = n;
        for (Int i = 0; i < n; ++i) {
            Int p = static_cast<Int>(rng() % static_cast<std::uint64_t>(alive)) + 1;
            benchmark::DoNotOptimize(ws.erase_at_position(p));
            --alive;
        }
    }
    state.SetComplexityN(n);
}
BENCHMARK(WorkingSetChurn)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

static void GoldenSieve(benchmark::State& state) {
    const Int steps = state.range(0);
    for (auto _ : state) {
        auto trace = goldsieve::run_golden(GroundSequence::naturals(), steps, steps);
        benchmark::DoNotOptimize(trace.deletions.data());
    }
    state.SetComplexityN(steps);
}
BENCHMARK(GoldenSieve)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void DoubleSieve(benchmark::State& state) {
    const Int steps = state.range(0);
    for (auto _ : state) {
        auto trace = goldsieve::run_double(GroundSequence::arith(2, 1), steps, steps);
        benchmark::DoNotOptimize(trace.pointer_values.data());
    }
    state.SetComplexityN(steps);
}
BENCHMARK(DoubleSieve)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void HiccupGenerate(benchmark::State& state) {
    const Int n = state.range(0);
    for (auto _ : state) {
        auto seq = goldsieve::hiccup_generate({1, 1, 3, 2}, n);
        benchmark::DoNotOptimize(seq.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(HiccupGenerate)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

static void CfExpandGamma(benchmark::State& state) {
    const Int a = state.range(0);
    for (auto _ : state) {
        auto cf = goldsieve::cf_expand(goldsieve::double_pointer_slope(a));
        benchmark::DoNotOptimize(cf.period.size());
    }
}
BENCHMARK(CfExpandGamma)->Arg(4)->Arg(64)->Arg(1024)->Arg(1 << 16);

static void RankTransformFixedPoint(benchmark::State& state) {
    const Int n = state.range(0);
    goldsieve::BlockSequence u(3, 2);
    for (auto _ : state) {
        auto fp = goldsieve::transform_fixed_point(u, n);
        benchmark::DoNotOptimize(fp.sequence.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(RankTransformFixedPoint)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Complexity();

BENCHMARK_MAIN();
