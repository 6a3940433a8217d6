// Parallel vs serial kernels on desk-scale inputs.

#include <benchmark/benchmark.h>

#include "superpow/power_pairs.hpp"

using namespace sp;

static void BM_PowerPair(benchmark::State& st) {
  MetricPair V = type_I(1, static_cast<int>(st.range(0)));
  bool par = st.range(1);
  for (auto _ : st) benchmark::DoNotOptimize(power_pair(Kind::Alt, V, 2, par));
}
BENCHMARK(BM_PowerPair)->ArgsProduct({{3, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_CheckPair(benchmark::State& st) {
  MetricPair W = power_pair(Kind::Sym, type_I(1, static_cast<int>(st.range(0))), 2);
  bool par = st.range(1);
  for (auto _ : st) benchmark::DoNotOptimize(check_metric_pair(W, par));
}
BENCHMARK(BM_CheckPair)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_RestrictedTensor(benchmark::State& st) {
  MetricPair V = type_I(1, 2);
  bool par = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(restricted_tensor_power(V, 3, par));
}
BENCHMARK(BM_RestrictedTensor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
