#include <benchmark/benchmark.h>

#include "terai/gaussint.hpp"

using namespace terai;

namespace {

void BM_gpow(benchmark::State& state) {
    GaussianInt z{12345, 67890};
    const unsigned long k = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gpow(z, k));
}

void BM_two_square_decompositions(benchmark::State& state) {
    const Natural n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(two_square_decompositions(n));
}

void BM_eval_pq_identities(benchmark::State& state) {
    const unsigned long k = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_pq_identities(5, 2, k));
}

}  // namespace

BENCHMARK(BM_gpow)->Arg(8)->Arg(64)->Arg(512);
BENCHMARK(BM_two_square_decompositions)->Arg(29)->Arg(85)->Arg(99961)->Arg(999961);
BENCHMARK(BM_eval_pq_identities)->Arg(1)->Arg(9)->Arg(99);
