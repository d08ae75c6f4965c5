#include <benchmark/benchmark.h>

#include "augss/pgroup.hpp"

using namespace augss;

static void BM_group_algebra_build(benchmark::State& state) {
    /* table validation, ideal chain, Jennings data and the basis theorem */
    PGroup g = state.range(0) == 0 ? cyclic_group(16)
               : state.range(0) == 1 ? metacyclic_group(8, 2, 4, 7)
                                     : heisenberg_group(3);
    for (auto _ : state) benchmark::DoNotOptimize(GroupAlgebra::make(g));
}
BENCHMARK(BM_group_algebra_build)->Arg(0)->Arg(1)->Arg(2);

static void BM_annihilator(benchmark::State& state) {
    auto A = GroupAlgebra::make(cyclic_group(16));
    for (auto _ : state)
        for (std::size_t k = 0; k <= A->L() + 1; ++k)
            benchmark::DoNotOptimize(A->annihilator(k));
}
BENCHMARK(BM_annihilator);
