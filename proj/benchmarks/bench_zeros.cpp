#include <benchmark/benchmark.h>

#include "angelesco/cascade.hpp"
#include "angelesco/gram.hpp"

using namespace angelesco;

static void BM_CascadeDiagonal(benchmark::State& state) {
    const AngelescoParams p{-1.0, 0.5, 0.0, 2.0};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(diagonal_zeros(p, n));
}
BENCHMARK(BM_CascadeDiagonal)->DenseRange(1, 8);

static void BM_GramOracle(benchmark::State& state) {
    const AngelescoParams p{-1.0, 0.5, 0.0, 2.0};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto poly = build_type2_polynomial(p, n, n);
        benchmark::DoNotOptimize(localize_roots(poly, p, n, n));
    }
}
BENCHMARK(BM_GramOracle)->DenseRange(1, 6);

BENCHMARK_MAIN();
