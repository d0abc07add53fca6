#include <benchmark/benchmark.h>

#include "tourlab/classify.hpp"
#include "tourlab/diamonds.hpp"
#include "tourlab/verify.hpp"

using namespace tourlab;

namespace {

template <class F>
void over_samples(benchmark::State& state, F&& f) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) f(sample_tournament(n, 7, i++));
  state.SetItemsProcessed(static_cast<std::int64_t>(i));
}

}  // namespace

static void BM_RecognizeD5(benchmark::State& state) {
  over_samples(state, [](const Tournament& t) { benchmark::DoNotOptimize(recognize_d5(t)); });
}
BENCHMARK(BM_RecognizeD5)->DenseRange(6, 9);

static void BM_InDk5(benchmark::State& state) {
  over_samples(state, [](const Tournament& t) { benchmark::DoNotOptimize(in_dk(t, 5)); });
}
BENCHMARK(BM_InDk5)->DenseRange(6, 9);

static void BM_MaxSubdet(benchmark::State& state) {
  over_samples(state, [](const Tournament& t) { benchmark::DoNotOptimize(max_subdet(t)); });
}
BENCHMARK(BM_MaxSubdet)->DenseRange(6, 10);

static void BM_DiamondCount(benchmark::State& state) {
  over_samples(state, [](const Tournament& t) { benchmark::DoNotOptimize(diamond_count(t)); });
}
BENCHMARK(BM_DiamondCount)->Arg(7)->Arg(12)->Arg(16);

static void BM_Census6(benchmark::State& state) {
  VerifyConfig config;
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(census(6, config));
}
BENCHMARK(BM_Census6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
