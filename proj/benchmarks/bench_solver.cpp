#include <benchmark/benchmark.h>

#include <random>

#include "exactgm/match.hpp"

using namespace exactgm;

namespace {

AdjacencyMatrix random_graph(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return AdjacencyMatrix::from_edges(n, edges);
}

void bm_match_random_pair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1234 + n);
    const AdjacencyMatrix e1 = random_graph(n, rng);
    const AdjacencyMatrix e2 = random_graph(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(match_graphs(e1, e2));
    }
}

void bm_surrogate_solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(99 + n);
    const QuadraticObjective quadratic =
        build_objective(random_graph(n, rng), random_graph(n, rng));
    const GmObjective objective(quadratic);
    const ConstraintSystem surrogate =
        build_perturbed(n, certify_params(quadratic).t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_convex(objective, surrogate));
    }
}

}  // namespace

BENCHMARK(bm_match_random_pair)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_surrogate_solve)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
