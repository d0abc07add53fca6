#include <benchmark/benchmark.h>

#include <random>

#include "tourlab/linalg.hpp"
#include "tourlab/lnfamily.hpp"
#include "tourlab/switching.hpp"
#include "tourlab/verify.hpp"

using namespace tourlab;

static void BM_Determinant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Tournament t = random_tournament(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(t));
}
BENCHMARK(BM_Determinant)->DenseRange(6, 20, 2);

static void BM_Pfaffian(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Tournament t = random_tournament(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(t));
}
BENCHMARK(BM_Pfaffian)->DenseRange(6, 16, 2);

static void BM_SwitchingCanonical(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Tournament t = random_tournament(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(switching_canonical(t));
}
BENCHMARK(BM_SwitchingCanonical)->DenseRange(4, 7);

static void BM_LnDet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(determinant(make_ln(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_LnDet)->Arg(10)->Arg(16)->Arg(20);
