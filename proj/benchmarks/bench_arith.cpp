#include <benchmark/benchmark.h>

#include "terai/arith.hpp"

using namespace terai;

namespace {

Natural random_odd(gmp_randclass& rng, unsigned bits) {
    Natural n = rng.get_z_bits(bits);
    if (mpz_even_p(n.get_mpz_t())) ++n;
    if (n < 3) n = 3;
    return n;
}

void BM_jacobi(benchmark::State& state) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(1UL);
    const unsigned bits = static_cast<unsigned>(state.range(0));
    Natural n = random_odd(rng, bits);
    Natural a = rng.get_z_bits(bits);
    for (auto _ : state) benchmark::DoNotOptimize(jacobi(a, n));
}

void BM_isqrt(benchmark::State& state) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(2UL);
    Natural n = rng.get_z_bits(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(isqrt(n));
}

void BM_is_prime(benchmark::State& state) {
    // worst case: an actual prime runs every witness
    Natural p("170141183460469231731687303715884105727");  // 2^127 - 1
    for (auto _ : state) benchmark::DoNotOptimize(is_prime(p));
}

}  // namespace

BENCHMARK(BM_jacobi)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_isqrt)->Arg(64)->Arg(1024)->Arg(16384);
BENCHMARK(BM_is_prime);
