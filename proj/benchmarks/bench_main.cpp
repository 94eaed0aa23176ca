#include <benchmark/benchmark.h>

#include "cyclaudit/cyclic.hpp"
#include "cyclaudit/modular.hpp"
#include "cyclaudit/qengine.hpp"

using namespace cyclaudit;

static void BM_CyclicDefectBernoulli(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto table = family_polynomials(bernoulli_family(static_cast<std::size_t>(n) + 2), n);
    for (auto _ : state) {
        auto d = cyclic_defect(table, n);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_CyclicDefectBernoulli)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_PeriodSpace(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto space = period_space(k);
        benchmark::DoNotOptimize(space);
    }
}
BENCHMARK(BM_PeriodSpace)->Arg(12)->Arg(24)->Arg(36);

static void BM_QFamilyTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = q_family_polynomials(QFamilyKind::q_bernoulli, n);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_QFamilyTable)->Arg(4)->Arg(6);

static void BM_CompletedL(benchmark::State& state) {
    const QExpansion d = delta_qexp(41);
    for (auto _ : state) {
        double v = completed_L(d, 12, 6, 40);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CompletedL);

BENCHMARK_MAIN();
