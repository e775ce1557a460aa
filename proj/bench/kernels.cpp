// Serial reference vs OpenMP kernels. Arg 0 is serial, 1 is parallel.
#include <benchmark/benchmark.h>

#include <random>

#include "nilcent/invariants.hpp"

using namespace nilcent;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_construct_invariants(benchmark::State& st) {
    Centralizer g(Partition::parse("4,3,2,1"));
    for (auto _ : st) benchmark::DoNotOptimize(elementary_invariants(g, Field::prime(7), exec_of(st)));
}

void BM_invariance_sweep(benchmark::State& st) {
    Centralizer g(Partition::parse("3,2,2,1"));
    Field f = Field::prime(5);
    auto xs = elementary_invariants(g, f);
    for (auto _ : st) benchmark::DoNotOptimize(verify_ad_invariance(g, xs, f, exec_of(st)));
}

void BM_rank_mod_p(benchmark::State& st) {
    const std::size_t n = 400;
    const std::uint64_t p = 32003;
    std::mt19937_64 rng(1);
    std::vector<std::uint64_t> data(n * n);
    for (auto& x : data) x = rng() % p;
    for (auto _ : st) benchmark::DoNotOptimize(rank_mod_p(data, n, n, p, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_construct_invariants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_invariance_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_mod_p)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
