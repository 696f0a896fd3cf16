// Serial against OpenMP kernels on dense random integer matrices.

#include <random>

#include <benchmark/benchmark.h>

#include "ncmot/kernels/elimination.hpp"

using namespace ncmot;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> v(-9, 9);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v(rng);
  return m;
}

void BM_RowReduceSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::row_reduce(m, true));
}

void BM_RowReduceParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::row_reduce(m, true));
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 2), b = random_matrix(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::multiply(a, b));
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 2), b = random_matrix(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::multiply(a, b));
}

}  // namespace

BENCHMARK(BM_RowReduceSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RowReduceParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MultiplySerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MultiplyParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
