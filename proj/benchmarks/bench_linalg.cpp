#include <benchmark/benchmark.h>

#include <random>

#include "augss/linalg.hpp"

using namespace augss;

namespace {

Matrix random_matrix(Scalar p, std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Scalar> coef(0, p - 1);
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, coef(rng));
    return m;
}

}  // namespace

static void BM_rref(benchmark::State& state) {
    Matrix m = random_matrix(static_cast<Scalar>(state.range(0)), state.range(1), 99);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Args({2, 64})->Args({2, 256})->Args({3, 64})->Args({3, 256});

static void BM_kernel(benchmark::State& state) {
    Matrix m = random_matrix(3, state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_kernel)->Arg(64)->Arg(128);

static void BM_quotient(benchmark::State& state) {
    std::size_t n = state.range(0);
    Subspace v = row_space(random_matrix(2, n, 13));
    Matrix half(2, v.dim() / 2, n);
    for (std::size_t i = 0; i < half.rows(); ++i) half.set_row(i, v.basis().row(2 * i));
    Subspace u = row_space(half);
    for (auto _ : state) benchmark::DoNotOptimize(quotient(v, u));
}
BENCHMARK(BM_quotient)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
