#include <benchmark/benchmark.h>

#include "terai/solver.hpp"

using namespace terai;

namespace {

void BM_find_solutions(benchmark::State& state) {
    const Natural bound = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(find_solutions(21, 29, bound, bound));
}

void BM_scan_cases(benchmark::State& state) {
    Instance inst = make_instance(5, 2);
    const Natural bound = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(scan_cases(inst, bound, bound));
}

void BM_verify_instance(benchmark::State& state) {
    Instance inst = make_instance(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_instance(inst));
}

void BM_verify_range(benchmark::State& state) {
    const unsigned jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_range(20, Bounds{}, jobs));
}

void BM_scan_instances(benchmark::State& state) {
    const Natural m_max = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(scan_instances(m_max));
}

}  // namespace

BENCHMARK(BM_find_solutions)->Arg(10)->Arg(40)->Arg(100);
BENCHMARK(BM_scan_cases)->Arg(15)->Arg(31);
BENCHMARK(BM_verify_instance);
BENCHMARK(BM_verify_range)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_instances)->Arg(40)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
