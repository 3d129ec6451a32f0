// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fanning/curves.hpp"
#include "fanning/invariants.hpp"
#include "fanning/kernels.hpp"

using namespace fanning;

namespace {

std::vector<Matrix> random_coeffs(Index dim, int order, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Matrix> c;
  for (int i = 0; i <= order; ++i) c.push_back(Matrix::NullaryExpr(dim, dim, [&] { return g(rng); }));
  return c;
}

template <auto Product>
void cauchy(benchmark::State& state) {
  const auto dim = static_cast<Index>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const auto a = random_coeffs(dim, order, 1);
  const auto b = random_coeffs(dim, order, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Product(a, b, order));
}

// Invariants of the standard-like polynomial curve over a grid of samples.
void grid(benchmark::State& state, Execution exec) {
  const int k = 4;
  const int n = 3;
  const auto samples = static_cast<std::size_t>(state.range(0));
  const PolynomialFrameCurve curve = standard_curve(k, n);
  std::vector<double> out(samples);
  for (auto _ : state) {
    kernels::for_each_index(exec, samples, [&](std::size_t i) {
      const double t = static_cast<double>(i) / static_cast<double>(samples);
      out[i] = wilczynski_invariants(eval_frame_jet(curve, t, 2 * k + 1)).kappa->value().norm();
    });
    benchmark::DoNotOptimize(out.data());
  }
}

void grid_serial(benchmark::State& state) { grid(state, Execution::serial); }
void grid_parallel(benchmark::State& state) { grid(state, Execution::parallel); }

}  // namespace

BENCHMARK(cauchy<kernels::serial::cauchy_product>)->Args({6, 9})->Args({12, 11})->Args({24, 13});
BENCHMARK(cauchy<kernels::omp::cauchy_product>)->Args({6, 9})->Args({12, 11})->Args({24, 13});
BENCHMARK(grid_serial)->Arg(64);
BENCHMARK(grid_parallel)->Arg(64);

BENCHMARK_MAIN();
