#include <benchmark/benchmark.h>

#include "invol/enumerate/enumerate.hpp"

using namespace invol;

namespace {

RestrictionSpec spec_3412_4321() {
    RestrictionSpec s;
    s.avoid = {Permutation::parse("3412"), Permutation::parse("4321")};
    return s;
}

void BM_CountSeriesOpenMP(benchmark::State& state) {
    const auto spec = spec_3412_4321();
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_series(spec, N, true));
}

void BM_CountSeriesSerial(benchmark::State& state) {
    const auto spec = spec_3412_4321();
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_series_serial(spec, N, true));
}

}  // namespace

BENCHMARK(BM_CountSeriesOpenMP)->DenseRange(9, 12, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountSeriesSerial)->DenseRange(9, 12, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
