#include <benchmark/benchmark.h>

#include "exactgm/simplex.hpp"

using namespace exactgm;

namespace {

void bm_lp_perturbed_diagonal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ConstraintSystem sys = build_perturbed(n, Rational(1, 100 * n));
    RatVector c = RatVector::Zero(n * n);
    for (int i = 0; i < n; ++i) c(i * n + i) = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_lp(sys, c));
    }
}

void bm_vertex_enumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ConstraintSystem sys = build_birkhoff(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_vertices(sys));
    }
}

}  // namespace

BENCHMARK(bm_lp_perturbed_diagonal)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(bm_vertex_enumeration)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
