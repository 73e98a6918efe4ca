#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactgm/error.hpp"
#include "exactgm/oracle.hpp"

using namespace exactgm;

namespace {

AdjacencyMatrix k3() {
    return AdjacencyMatrix::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
}

AdjacencyMatrix p3() {
    return AdjacencyMatrix::from_edges(3, {{0, 1}, {1, 2}});
}

AdjacencyMatrix random_graph(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return AdjacencyMatrix::from_edges(n, edges);
}

AdjacencyMatrix relabel(const AdjacencyMatrix& g, const std::vector<int>& sigma) {
    const int n = g.n();
    IntMatrix out = IntMatrix::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g(u, v)) out(sigma[u], sigma[v]) = 1;
    return AdjacencyMatrix(n, std::move(out));
}

}  // namespace

TEST_CASE("matching a triangle against itself") {
    const OracleResult result = oracle_gm(k3(), k3());
    CHECK(result.min_symdiff == 0);
    CHECK(result.max_qform == 6);
    CHECK(result.optimal_count == 6);  // every permutation preserves K3
    CHECK(result.best_sigma.image == std::vector<int>{0, 1, 2});
}

TEST_CASE("matching a triangle against a path") {
    const OracleResult result = oracle_gm(k3(), p3());
    CHECK(result.min_symdiff == 1);
    CHECK(result.max_qform == 4);
    CHECK(result.optimal_count == 6);
}

TEST_CASE("matching a 4-cycle against a 4-path") {
    const AdjacencyMatrix c4 =
        AdjacencyMatrix::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const AdjacencyMatrix p4 =
        AdjacencyMatrix::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    const OracleResult result = oracle_gm(c4, p4);
    CHECK(result.min_symdiff == 1);  // edge counts differ, so 0 is impossible
    CHECK(result.max_qform == 6);
    // Optimal relabelings are exactly the automorphisms of the 4-cycle.
    CHECK(result.optimal_count == 8);
    CHECK(result.best_sigma.image == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("isomorphic graphs reach symmetric difference zero") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 5; ++trial) {
        const AdjacencyMatrix g = random_graph(5, rng);
        std::vector<int> sigma{0, 1, 2, 3, 4};
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const OracleResult result = oracle_gm(g, relabel(g, sigma));
        CHECK(result.min_symdiff == 0);
        CHECK(result.max_qform == 2 * g.edge_count());
    }
}

TEST_CASE("the optimum value is invariant under joint relabeling") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 5; ++trial) {
        const AdjacencyMatrix e1 = random_graph(5, rng);
        const AdjacencyMatrix e2 = random_graph(5, rng);
        std::vector<int> sigma{0, 1, 2, 3, 4};
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const OracleResult base = oracle_gm(e1, e2);
        const OracleResult conjugated = oracle_gm(relabel(e1, sigma), relabel(e2, sigma));
        CHECK(base.min_symdiff == conjugated.min_symdiff);
        CHECK(base.max_qform == conjugated.max_qform);
        CHECK(base.optimal_count == conjugated.optimal_count);
    }
}

TEST_CASE("oracle result satisfies its own identity") {
    std::mt19937_64 rng(3141);
    const AdjacencyMatrix e1 = random_graph(6, rng);
    const AdjacencyMatrix e2 = random_graph(6, rng);
    const OracleResult result = oracle_gm(e1, e2);
    CHECK(result.min_symdiff == e1.edge_count() + e2.edge_count() - result.max_qform);
    CHECK(result.optimal_count >= 1);
    CHECK(result.min_symdiff ==
          symmetric_difference(e1, e2, result.best_sigma));
}

TEST_CASE("exhaustion refuses oversized instances") {
    const AdjacencyMatrix big(11, IntMatrix::Zero(11, 11));
    CHECK_THROWS_AS(oracle_gm(big, big), SizeLimitError);
}
