#include <benchmark/benchmark.h>

#include <turing/constants.hpp>
#include <turing/gram_scanner.hpp>

using namespace turing;

static void BM_ZetaReal(benchmark::State& state) {
    for (auto _ : state) {
        clear_kernel_cache();
        benchmark::DoNotOptimize(zeta_real(1.25));
    }
}
BENCHMARK(BM_ZetaReal);

static void BM_LogZetaTailCold(benchmark::State& state) {
    for (auto _ : state) {
        clear_kernel_cache();
        benchmark::DoNotOptimize(log_zeta_tail(1.25));
    }
}
BENCHMARK(BM_LogZetaTailCold)->Unit(benchmark::kMillisecond);

static void BM_LogZetaTailWarm(benchmark::State& state) {
    benchmark::DoNotOptimize(log_zeta_tail(1.25));
    for (auto _ : state) benchmark::DoNotOptimize(log_zeta_tail(1.25));
}
BENCHMARK(BM_LogZetaTailWarm);

static void BM_ZetaConstants(benchmark::State& state) {
    for (auto _ : state) {
        clear_kernel_cache();
        benchmark::DoNotOptimize(zeta_constants({1.10, 0.75}));
    }
}
BENCHMARK(BM_ZetaConstants)->Unit(benchmark::kMillisecond);

static void BM_Theta(benchmark::State& state) {
    double t = 1000.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta(t));
        t += 0.001;
    }
}
BENCHMARK(BM_Theta);

static void BM_ZFunction(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(z_function(t, 2).value);
}
BENCHMARK(BM_ZFunction)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_GramPoint(benchmark::State& state) {
    long n = 1000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_point(n).ordinate);
        n = (n % 100000) + 1000;
    }
}
BENCHMARK(BM_GramPoint);

static void BM_ScanGramInterval(benchmark::State& state) {
    const double lo = gram_point(500).ordinate;
    const double hi = gram_point(501).ordinate;
    for (auto _ : state) benchmark::DoNotOptimize(scan_interval(lo, hi).size());
}
BENCHMARK(BM_ScanGramInterval);

BENCHMARK_MAIN();
