// Serial reference kernels against the OpenMP ones, on the dense rational
// matrices everything downstream reduces to.

#include <benchmark/benchmark.h>

#include "dercalc/linalg.hpp"
#include "dercalc/sampling.hpp"

namespace {

using namespace dercalc;

Matrix bench_matrix(std::size_t n, std::uint64_t seed) {
  Policy pol;
  pol.entry_min = -9;
  pol.entry_max = 9;
  SplitMix64 rng(seed);
  return random_matrix(n, n, rng, pol);
}

void BM_mul_serial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = bench_matrix(n, 1), b = bench_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(a, b));
}

void BM_mul_parallel(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = bench_matrix(n, 1), b = bench_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(a, b));
}

void BM_rref_serial(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = bench_matrix(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref_serial(a));
}

void BM_rref_parallel(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix a = bench_matrix(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref_parallel(a));
}

BENCHMARK(BM_mul_serial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_serial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
