#include <benchmark/benchmark.h>

#include "walls/walls.hpp"

using namespace walls;

// Each iteration builds its own table so memoization does not carry over.

static void BM_ATableRow(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    ATable t;
    for (long k = 0; k <= n; ++k) benchmark::DoNotOptimize(t.rec(n, k));
  }
}
BENCHMARK(BM_ATableRow)->Arg(25)->Arg(50)->Arg(100);

static void BM_BTableRow(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    BTable t;
    for (long k = 0; k <= n; ++k) benchmark::DoNotOptimize(t.b(n, k));
  }
}
BENCHMARK(BM_BTableRow)->Arg(10)->Arg(20)->Arg(40);

static void BM_OmegaGrid(benchmark::State& state) {
  const long total = state.range(0);
  for (auto _ : state) {
    OmegaTable t;
    for (long n = 0; n <= total; ++n) {
      for (long m = 0; n + m <= total; ++m) benchmark::DoNotOptimize(t.value(n, m, m));
    }
  }
}
BENCHMARK(BM_OmegaGrid)->Arg(8)->Arg(14);

static void BM_KernelChain(benchmark::State& state) {
  const long degree = state.range(0);
  for (auto _ : state) {
    KernelChain chain(degree);
    benchmark::DoNotOptimize(chain.D(5));
  }
}
BENCHMARK(BM_KernelChain)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_DkClosed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dk_closed(state.range(0), 20));
}
BENCHMARK(BM_DkClosed)->Arg(1)->Arg(4)->Arg(8);

static void BM_LinearExtensionsTableau(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  WallShape shape;
  shape.rows = {n, n, n};
  for (int c = 0; c + 1 < n; ++c) shape.walls.emplace_back(0, c);
  const Poset p = tableau_poset(shape);
  for (auto _ : state) benchmark::DoNotOptimize(count_linear_extensions(p));
}
BENCHMARK(BM_LinearExtensionsTableau)->Arg(4)->Arg(6)->Arg(8);

static void BM_LinearExtensionsAntichain(benchmark::State& state) {
  const Poset p = antichain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_linear_extensions(p));
}
BENCHMARK(BM_LinearExtensionsAntichain)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_TreeChildClosed(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    for (long k = 0; k < n; ++k) benchmark::DoNotOptimize(tc_closed(n, k));
  }
}
BENCHMARK(BM_TreeChildClosed)->Arg(15)->Arg(30);

static void BM_TreeChildAsymptotic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tc_asym_log(state.range(0), 3));
}
BENCHMARK(BM_TreeChildAsymptotic)->Arg(200)->Arg(2000);

BENCHMARK_MAIN();
