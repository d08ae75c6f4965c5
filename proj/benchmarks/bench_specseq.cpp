#include <benchmark/benchmark.h>

#include "augss/koszul.hpp"
#include "augss/specseq.hpp"

using namespace augss;

static void BM_filter_dual_cone(benchmark::State& state) {
    KoszulComplex K = build_koszul(2, state.range(0));
    std::vector<Scalar> mu(K.subsets[2].size(), 0);
    mu[0] = 1;
    FreeComplex D = dual_cone(K, cycle_from_mu(K, 2, mu));
    for (auto _ : state) benchmark::DoNotOptimize(filter(D));
}
BENCHMARK(BM_filter_dual_cone)->Arg(2)->Arg(3);

static void BM_page_one(benchmark::State& state) {
    KoszulComplex K = build_koszul(2, state.range(0));
    std::vector<Scalar> mu(K.subsets[2].size(), 0);
    mu[0] = 1;
    FilteredComplex FC = filter(dual_cone(K, cycle_from_mu(K, 2, mu)));
    for (auto _ : state) benchmark::DoNotOptimize(page(FC, 1));
}
BENCHMARK(BM_page_one)->Arg(2)->Arg(3);

static void BM_all_pages(benchmark::State& state) {
    KoszulComplex K = build_koszul(static_cast<Scalar>(state.range(0)), 2);
    std::vector<Scalar> mu(K.subsets[2].size(), 0);
    mu[0] = 1;
    FilteredComplex FC = filter(dual_cone(K, cycle_from_mu(K, 2, mu)));
    for (auto _ : state)
        for (std::size_t r = 1; r <= FC.L() + 1; ++r) benchmark::DoNotOptimize(page(FC, r));
}
BENCHMARK(BM_all_pages)->Arg(2)->Arg(3);
