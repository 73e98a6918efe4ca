#include <benchmark/benchmark.h>

#include <random>

#include "exactgm/oracle.hpp"

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

void bm_oracle_exhaustion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7 * n);
    const AdjacencyMatrix e1 = random_graph(n, rng);
    const AdjacencyMatrix e2 = random_graph(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_gm(e1, e2));
    }
}

}  // namespace

BENCHMARK(bm_oracle_exhaustion)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
