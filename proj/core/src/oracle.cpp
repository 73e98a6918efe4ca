#include "exactgm/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "exactgm/error.hpp"

namespace exactgm {

OracleResult oracle_gm(const AdjacencyMatrix& e1, const AdjacencyMatrix& e2) {
    const int n = e1.n();
    if (e2.n() != n) {
        throw DimensionMismatchError("graphs must have the same vertex count");
    }
    if (n > 10) {
        throw SizeLimitError("exhaustive search supports n <= 10, got " +
                             std::to_string(n));
    }

    const long long edges_total = e1.edge_count() + e2.edge_count();
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);

    OracleResult result;
    bool first = true;
    do {
        long long qform = 0;
        long long disagreements = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                const int relabeled = e1(u, v);
                const int target = e2(image[u], image[v]);
                if (relabeled != 0) qform += target;
                if (relabeled != target) ++disagreements;
            }
        }
        const long long symdiff = disagreements / 2;
        if (qform % 2 != 0 || symdiff != edges_total - qform) {
            throw InternalConsistencyError("symdiff/qform identity violated");
        }
        if (first || qform > result.max_qform) {
            result.max_qform = qform;
            result.min_symdiff = symdiff;
            result.best_sigma = Permutation{image};
            result.optimal_count = 1;
            first = false;
        } else if (qform == result.max_qform) {
            ++result.optimal_count;
        }
    } while (std::next_permutation(image.begin(), image.end()));

    return result;
}

}  // namespace exactgm
