#include "exactgm/objective.hpp"

#include "exactgm/error.hpp"

namespace exactgm {

AdjacencyMatrix::AdjacencyMatrix(int n, IntMatrix entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 1 || entries_.rows() != n_ || entries_.cols() != n_) {
        throw InvalidDimensionError("adjacency matrix must be n x n");
    }
    for (int i = 0; i < n_; ++i) {
        if (entries_(i, i) != 0) {
            throw Error("self-loop at vertex " + std::to_string(i + 1));
        }
        for (int j = 0; j < n_; ++j) {
            if (entries_(i, j) != 0 && entries_(i, j) != 1) {
                throw Error("adjacency entries must be 0 or 1");
            }
            if (entries_(i, j) != entries_(j, i)) {
                throw Error("adjacency matrix must be symmetric");
            }
        }
    }
}

AdjacencyMatrix AdjacencyMatrix::from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
    IntMatrix entries = IntMatrix::Zero(n, n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw Error("edge endpoint out of range");
        }
        if (u == v) {
            throw Error("self-loop at vertex " + std::to_string(u + 1));
        }
        entries(u, v) = 1;
        entries(v, u) = 1;
    }
    return AdjacencyMatrix(n, std::move(entries));
}

long long AdjacencyMatrix::edge_count() const {
    long long total = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) total += entries_(i, j);
    return total / 2;
}

Rational ConvexObjective::evaluate_vec(const RatVector& v) const {
    return evaluate(unvec(v, n()));
}

RatMatrix unvec(const RatVector& v, int n) {
    if (v.size() != n * n) throw DimensionMismatchError("vector is not n^2 long");
    RatMatrix x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = v(i * n + j);
    return x;
}

long long spectral_bound(const AdjacencyMatrix& e) {
    long long best = 0;
    for (int i = 0; i < e.n(); ++i) {
        long long row = 0;
        for (int j = 0; j < e.n(); ++j) row += e(i, j);
        best = std::max(best, row);
    }
    return best;
}

QuadraticObjective build_objective(const AdjacencyMatrix& e1,
                                   const AdjacencyMatrix& e2) {
    if (e1.n() != e2.n()) {
        throw DimensionMismatchError("graphs must have the same vertex count");
    }
    QuadraticObjective obj{e1, e2, 0, 0};
    obj.lambda_bound = spectral_bound(e1) * spectral_bound(e2);
    obj.mu = obj.lambda_bound + 1;
    return obj;
}

Rational eval_qform(const QuadraticObjective& obj, const RatMatrix& x) {
    const int n = obj.n();
    if (x.rows() != n || x.cols() != n) {
        throw DimensionMismatchError("point dimension does not match objective");
    }
    // tr((E1 x)^T (x E2)) without materializing the Kronecker form.
    RatMatrix left(n, n), right(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational l = 0, r = 0;
            for (int k = 0; k < n; ++k) {
                if (obj.e1(i, k) != 0) l += x(k, j);
                if (obj.e2(k, j) != 0) r += x(i, k);
            }
            left(i, j) = l;
            right(i, j) = r;
        }
    }
    Rational total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) total += left(i, j) * right(i, j);
    return total;
}

Rational eval_f(const QuadraticObjective& obj, const RatMatrix& x) {
    Rational total = eval_qform(obj, x);
    Rational squares = 0;
    for (int i = 0; i < obj.n(); ++i)
        for (int j = 0; j < obj.n(); ++j) squares += x(i, j) * x(i, j);
    return total + Rational(obj.mu) * squares;
}

long long symmetric_difference(const AdjacencyMatrix& e1, const AdjacencyMatrix& e2,
                               const Permutation& sigma) {
    const int n = e1.n();
    if (e2.n() != n || sigma.n() != n) {
        throw DimensionMismatchError("graph/permutation dimensions disagree");
    }
    long long disagreements = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (e1(u, v) != e2(sigma.image[u], sigma.image[v])) ++disagreements;
        }
    }
    return disagreements / 2;
}

Rational delta_for_quadratic(const QuadraticObjective& obj) {
    const int n = obj.n();
    Integer root = isqrt(Integer(n));
    if (root * root < n) root += 1;  // ceil(sqrt(n))
    const Rational candidate =
        Rational(1, Integer(4) * obj.mu * (2 * root + 1));
    const Rational guard(999, 1000);  // keeps delta_hat strictly below 1
    return candidate < guard ? candidate : guard;
}

IntMatrix q_matrix(const QuadraticObjective& obj) {
    const int n = obj.n();
    IntMatrix q = IntMatrix::Zero(n * n, n * n);
    // Row-major vec: coefficient of x_{kj} x_{il} is E1_{ki} E2_{jl}.
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l)
                    q(k * n + j, i * n + l) = obj.e1(k, i) * obj.e2(j, l);
    return q;
}

SeparableQuadraticObjective::SeparableQuadraticObjective(RatMatrix quad,
                                                         RatMatrix linear,
                                                         bool integer_on_vertices)
    : n_(static_cast<int>(quad.rows())),
      quad_(std::move(quad)),
      linear_(std::move(linear)),
      integer_on_vertices_(integer_on_vertices) {
    if (quad_.rows() != quad_.cols() || linear_.rows() != n_ ||
        linear_.cols() != n_) {
        throw DimensionMismatchError("coefficient matrices must be n x n");
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (quad_(i, j) < 0) {
                throw Error("negative square coefficient breaks convexity");
            }
        }
    }
}

std::optional<QuadraticStructure> GmObjective::quadratic_structure() const {
    const int n = obj_.n();
    const int vars = n * n;
    QuadraticStructure structure;
    structure.linear = RatVector::Zero(vars);
    structure.products.reserve(vars);
    const Rational mu(obj_.mu);
    for (int k = 0; k < vars; ++k) structure.products.emplace_back(k, k, mu);
    // Off-diagonal entries of the Kronecker form, upper triangle doubled.
    for (int a = 0; a < vars; ++a) {
        for (int b = a + 1; b < vars; ++b) {
            if (obj_.e1(a / n, b / n) != 0 && obj_.e2(a % n, b % n) != 0) {
                structure.products.emplace_back(a, b, Rational(2));
            }
        }
    }
    return structure;
}

std::optional<QuadraticStructure>
SeparableQuadraticObjective::quadratic_structure() const {
    QuadraticStructure structure;
    structure.linear = RatVector::Zero(n_ * n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const int k = i * n_ + j;
            structure.linear(k) = linear_(i, j);
            if (quad_(i, j) != 0) {
                structure.products.emplace_back(k, k, quad_(i, j));
            }
        }
    }
    return structure;
}

Rational SeparableQuadraticObjective::evaluate(const RatMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_) {
        throw DimensionMismatchError("point dimension does not match objective");
    }
    Rational total = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            total += quad_(i, j) * x(i, j) * x(i, j) + linear_(i, j) * x(i, j);
        }
    }
    return total;
}

}  // namespace exactgm
