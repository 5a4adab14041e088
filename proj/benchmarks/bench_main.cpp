#include "ospd/decomp/decomposition.hpp"
#include "ospd/decomp/verify.hpp"
#include "ospd/exactlin/echelon.hpp"
#include "ospd/repmod/module_action.hpp"
#include "ospd/superalg/constructors.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ospd;

namespace {

exactlin::ExactMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-4, 4);
  exactlin::ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = exactlin::Scalar(exactlin::Rational(d(rng)), exactlin::Rational(d(rng)));
  return m;
}

void bm_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const exactlin::ExactMatrix m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(exactlin::rref(m));
}
BENCHMARK(bm_rref)->Arg(8)->Arg(16)->Arg(32);

void bm_build_example(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(decomp::build_example_decomposition(k, n));
}
BENCHMARK(bm_build_example)->Args({2, 1})->Args({3, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void bm_verify_sum(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const decomp::ExampleDecomposition ex = decomp::build_example_decomposition(k, n);
  for (auto _ : state) benchmark::DoNotOptimize(decomp::verify_sum(ex.s, ex.k, ex.l, {.fingerprints = false}));
}
BENCHMARK(bm_verify_sum)->Args({2, 1})->Args({3, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void bm_decompose_odd(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const superalg::Superalgebra s = superalg::build_osp(m, n);
  const repmod::ModuleAction odd = repmod::adjoint_action(s.ideal("I1")->basis, s.odd_basis());
  for (auto _ : state) benchmark::DoNotOptimize(repmod::decompose_module(odd));
}
BENCHMARK(bm_decompose_odd)->Args({3, 1})->Args({5, 2})->Args({6, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
