#include <benchmark/benchmark.h>

#include "latpack/latpack.hpp"

using namespace latpack;

static void BM_PackOdd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pack_odd(n));
}
BENCHMARK(BM_PackOdd)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_PackEven(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pack_even(n));
}
BENCHMARK(BM_PackEven)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_VerifyPackOdd(benchmark::State& state) {
  const auto set = pack_odd(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_packing(set));
}
BENCHMARK(BM_VerifyPackOdd)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_PackSingle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pack_single(n));
}
BENCHMARK(BM_PackSingle)->Arg(13)->Arg(21)->Arg(100);

static void BM_Mols(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mols_packed(p));
}
BENCHMARK(BM_Mols)->Arg(13)->Arg(17);

static void BM_EnumerateLatin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_latin_squares(n, [](const SquareMatrix&) {}));
}
BENCHMARK(BM_EnumerateLatin)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
