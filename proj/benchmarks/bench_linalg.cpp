// Dense kernels over GF(2), GF(3), GF(4) and GF(9).

#include <benchmark/benchmark.h>

#include <random>

#include "modrep/linalg.hpp"
#include "modrep/matrix.hpp"

using namespace modrep;

namespace {

FieldPtr field_for(int code) {
  switch (code) {
    case 0: return FiniteField::make(2);
    case 1: return FiniteField::make(3);
    case 2: return FiniteField::make(2, 2);
    default: return FiniteField::make(3, 2);
  }
}

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> d(0, f->order() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

void field_args(benchmark::internal::Benchmark* b) {
  for (int f = 0; f < 4; ++f)
    for (int n : {32, 64, 128, 256}) b->Args({f, n});
}

void BM_Multiply(benchmark::State& state) {
  const auto f = field_for(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  const Matrix a = random_matrix(f, n, n, 1), b = random_matrix(f, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetLabel(f->name());
}
BENCHMARK(BM_Multiply)->Apply(field_args);

void BM_Rank(benchmark::State& state) {
  const auto f = field_for(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  const Matrix a = random_matrix(f, n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
  state.SetLabel(f->name());
}
BENCHMARK(BM_Rank)->Apply(field_args);

void BM_Kernel(benchmark::State& state) {
  const auto f = field_for(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  const Matrix a = random_matrix(f, n / 2, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(a));
  state.SetLabel(f->name());
}
BENCHMARK(BM_Kernel)->Apply(field_args);

void BM_Inverse(benchmark::State& state) {
  const auto f = field_for(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  Matrix a = random_matrix(f, n, n, 5);
  for (std::uint64_t s = 6; !is_invertible(a); ++s) a = random_matrix(f, n, n, s);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
  state.SetLabel(f->name());
}
BENCHMARK(BM_Inverse)->Apply(field_args);

void BM_FittingSplit(benchmark::State& state) {
  const auto f = field_for(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  const Matrix a = random_matrix(f, n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(fitting_split(a));
  state.SetLabel(f->name());
}
BENCHMARK(BM_FittingSplit)->Apply(field_args);

}  // namespace
BENCHMARK_MAIN();
