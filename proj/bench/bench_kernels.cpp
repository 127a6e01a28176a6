#include <benchmark/benchmark.h>

#include "strebel/amplitudes.hpp"
#include "strebel/bessel.hpp"
#include "strebel/series.hpp"

using namespace strebel;

namespace {

Series operand(int order) {
    Series s = bessel_reduced_series(0, order);
    return series_pow(s, 7);
}

void BM_mul_serial(benchmark::State& st) {
    const Series a = operand(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(series_mul_serial(a, a));
}

void BM_mul_parallel(benchmark::State& st) {
    const Series a = operand(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(series_mul_parallel(a, a));
}

void BM_volumes_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(volume_table_serial(static_cast<int>(st.range(0))));
}

void BM_volumes_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(volume_table(static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(64)->Arg(256);
BENCHMARK(BM_mul_parallel)->Arg(64)->Arg(256);
BENCHMARK(BM_volumes_serial)->Arg(100)->Arg(200);
BENCHMARK(BM_volumes_parallel)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
