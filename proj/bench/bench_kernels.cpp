#include "rainbowk/construction.hpp"
#include "rainbowk/oracle.hpp"
#include "rainbowk/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace rainbowk;

static void BM_VerifySerial(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    const auto c = build_coloring(make_scheme(k, r));
    for (auto _ : state) benchmark::DoNotOptimize(verify_k_connectivity_serial(c, k).ok);
}
BENCHMARK(BM_VerifySerial)->Args({4, 18})->Args({5, 41})->Unit(benchmark::kMillisecond);

static void BM_VerifyParallel(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    const auto c = build_coloring(make_scheme(k, r));
    for (auto _ : state) benchmark::DoNotOptimize(verify_k_connectivity(c, k).ok);
}
BENCHMARK(BM_VerifyParallel)->Args({4, 18})->Args({5, 41})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_CountSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_valid_colorings_serial(3, 2, 3));
}
BENCHMARK(BM_CountSerial)->Unit(benchmark::kMillisecond);

static void BM_CountParallel(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_valid_colorings(3, 2, 3, false, jobs));
}
BENCHMARK(BM_CountParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_BuildColoring(benchmark::State& state) {
    const auto s = make_scheme(5, 41);
    for (auto _ : state) benchmark::DoNotOptimize(build_coloring(s));
}
BENCHMARK(BM_BuildColoring);

BENCHMARK_MAIN();
