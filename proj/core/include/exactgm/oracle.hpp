#pragma once

#include "exactgm/objective.hpp"
#include "exactgm/polytope.hpp"

namespace exactgm {

/// Ground truth for a Graph Matching instance, by exhaustion over all n!
/// permutations in lexicographic order.
struct OracleResult {
    Permutation best_sigma;     // lexicographically first optimum
    long long min_symdiff = 0;
    long long max_qform = 0;
    long long optimal_count = 0;
};

/// Requires n <= 10. Cross-checks the symdiff/qform identity on every
/// permutation as it goes.
OracleResult oracle_gm(const AdjacencyMatrix& e1, const AdjacencyMatrix& e2);

}  // namespace exactgm
