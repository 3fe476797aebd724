#include <benchmark/benchmark.h>

#include "liealg/bider.hpp"
#include "liealg/constructors.hpp"

#include <random>

using namespace liealg;

namespace {

RationalMatrix random_sparse(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> gap(0, 4);
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (gap(rng) == 0) {
        m.set(r, c, Rational(num(rng)));
      }
    }
  }
  return m;
}

void BM_rref_random(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = random_sparse(2 * n, n, 91);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_rref_random)->Arg(32)->Arg(64)->Arg(128);

void BM_nullspace_bider_system(benchmark::State& state) {
  const auto g = special_linear(2);
  const auto ad = adjoint(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(biderivation_space(g, ad, BiderMode::symmetric));
  }
}
BENCHMARK(BM_nullspace_bider_system);

void BM_bider_heisenberg(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = heisenberg(n);
  const auto ad = adjoint(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(biderivation_space(g, ad, BiderMode::full));
  }
}
BENCHMARK(BM_bider_heisenberg)->Arg(1)->Arg(2);

void BM_super_bider_sl21(benchmark::State& state) {
  const auto g = special_linear_super(2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(super_biderivation_space(g, Parity::even, true));
  }
}
BENCHMARK(BM_super_bider_sl21);

void BM_derivation_space_sl3(benchmark::State& state) {
  const auto rep = adjoint(special_linear(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivation_space(rep));
  }
}
BENCHMARK(BM_derivation_space_sl3);

void BM_validate_oscillator(benchmark::State& state) {
  const auto g = oscillator(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(g));
  }
}
BENCHMARK(BM_validate_oscillator);

} // namespace

BENCHMARK_MAIN();
