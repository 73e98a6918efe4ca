#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "exactgm/error.hpp"
#include "exactgm/objective.hpp"

using namespace exactgm;

namespace {

AdjacencyMatrix k3() {
    return AdjacencyMatrix::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
}

AdjacencyMatrix p3() {
    return AdjacencyMatrix::from_edges(3, {{0, 1}, {1, 2}});
}

AdjacencyMatrix edgeless(int n) { return AdjacencyMatrix(n, IntMatrix::Zero(n, n)); }

AdjacencyMatrix random_graph(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return AdjacencyMatrix::from_edges(n, edges);
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = i;
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> dist(0, i);
        std::swap(image[i], image[dist(rng)]);
    }
    return Permutation{image};
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

/// Numeric spectral radius of the materialized Kronecker form; a
/// floating-point oracle for the integer bound.
double numeric_spectral_radius(const QuadraticObjective& obj) {
    const IntMatrix q = q_matrix(obj);
    Eigen::MatrixXd qd(q.rows(), q.cols());
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j) qd(i, j) = q(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(qd);
    return eigen.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("adjacency matrix validation") {
    IntMatrix loop = IntMatrix::Zero(2, 2);
    loop(0, 0) = 1;
    CHECK_THROWS_AS(AdjacencyMatrix(2, loop), Error);

    IntMatrix asym = IntMatrix::Zero(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(AdjacencyMatrix(2, asym), Error);

    CHECK_THROWS_AS(AdjacencyMatrix::from_edges(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(AdjacencyMatrix::from_edges(2, {{0, 5}}), Error);

    const AdjacencyMatrix g = AdjacencyMatrix::from_edges(3, {{2, 0}});
    CHECK(g(0, 2) == 1);
    CHECK(g(2, 0) == 1);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("spectral bound is the maximum row sum") {
    CHECK(spectral_bound(k3()) == 2);
    CHECK(spectral_bound(p3()) == 2);
    CHECK(spectral_bound(edgeless(3)) == 0);
}

TEST_CASE("objective construction picks mu just above the bound") {
    const QuadraticObjective kk = build_objective(k3(), k3());
    CHECK(kk.lambda_bound == 4);
    CHECK(kk.mu == 5);

    const QuadraticObjective kp = build_objective(k3(), p3());
    CHECK(kp.lambda_bound == 4);
    CHECK(kp.mu == 5);

    const QuadraticObjective ee = build_objective(edgeless(3), k3());
    CHECK(ee.lambda_bound == 0);
    CHECK(ee.mu == 1);

    CHECK_THROWS_AS(build_objective(k3(), edgeless(4)), DimensionMismatchError);
}

TEST_CASE("the bound dominates the true spectral radius") {
    // (K3, K3): the Kronecker spectrum is {4, -2, -2, -2, -2, 1, 1, 1, 1},
    // so the row-sum bound of 4 is attained exactly.
    const QuadraticObjective kk = build_objective(k3(), k3());
    CHECK(numeric_spectral_radius(kk) == doctest::Approx(4.0).epsilon(1e-9));

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const QuadraticObjective obj =
            build_objective(random_graph(4, rng), random_graph(4, rng));
        CHECK(numeric_spectral_radius(obj) <=
              static_cast<double>(obj.lambda_bound) + 1e-9);
    }
}

TEST_CASE("quadratic form at worked points") {
    const QuadraticObjective kk = build_objective(k3(), k3());
    const QuadraticObjective kp = build_objective(k3(), p3());
    RatMatrix identity = to_rational(IntMatrix::Identity(3, 3));
    CHECK(eval_qform(kk, identity) == 6);
    CHECK(eval_qform(kp, identity) == 4);
    CHECK(eval_qform(kk, RatMatrix::Zero(3, 3)) == 0);

    CHECK(eval_f(kk, identity) == 21);
    CHECK(eval_f(kp, identity) == 19);
    CHECK(eval_f(kk, RatMatrix::Zero(3, 3)) == 0);
}

TEST_CASE("materialized Kronecker form agrees with the product evaluation") {
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<int> num(-10, 10);
    const QuadraticObjective obj = build_objective(k3(), p3());
    const IntMatrix q = q_matrix(obj);
    REQUIRE(q.rows() == 9);
    // Q is symmetric since both adjacency matrices are.
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) CHECK(q(a, b) == q(b, a));

    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix x(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) x(i, j) = Rational(num(rng), 7);
        Rational quadratic = 0;
        for (int a = 0; a < 9; ++a) {
            for (int b = 0; b < 9; ++b) {
                if (q(a, b) != 0) {
                    quadratic += Rational(q(a, b)) * x(a / 3, a % 3) * x(b / 3, b % 3);
                }
            }
        }
        CHECK(quadratic == eval_qform(obj, x));
    }
}

TEST_CASE("symmetric difference at worked permutations") {
    const Permutation identity{{0, 1, 2}};
    CHECK(symmetric_difference(k3(), k3(), identity) == 0);
    CHECK(symmetric_difference(k3(), p3(), identity) == 1);
}

TEST_CASE("Frobenius identity links the quadratic form and the symmetric difference") {
    // Worked instance: 2|E1| + 2|E2| - 2 qform = 2*3 + 2*2 - 2*4 = 2 = 2 symdiff.
    const QuadraticObjective kp = build_objective(k3(), p3());
    const RatMatrix identity = to_rational(IntMatrix::Identity(3, 3));
    CHECK(2 * k3().edge_count() + 2 * p3().edge_count() - 2 * eval_qform(kp, identity) ==
          2 * symmetric_difference(k3(), p3(), Permutation{{0, 1, 2}}));

    std::mt19937_64 rng(9090);
    for (int trial = 0; trial < 25; ++trial) {
        const AdjacencyMatrix e1 = random_graph(4, rng);
        const AdjacencyMatrix e2 = random_graph(4, rng);
        const QuadraticObjective obj = build_objective(e1, e2);
        const Permutation sigma = random_permutation(4, rng);
        const RatMatrix x = to_rational(permutation_matrix(sigma));

        IntMatrix left = IntMatrix::Zero(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    left(i, j) += e1(i, k) * permutation_matrix(sigma)(k, j) -
                                  permutation_matrix(sigma)(i, k) * e2(k, j);
        long long frobenius = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) frobenius += left(i, j) * left(i, j);

        const Rational qform = eval_qform(obj, x);
        CHECK(Rational(frobenius) ==
              2 * e1.edge_count() + 2 * e2.edge_count() - 2 * qform);
        CHECK(Rational(frobenius) ==
              2 * Rational(symmetric_difference(e1, e2, sigma)));
    }
}

TEST_CASE("certified continuity radius") {
    CHECK(delta_for_quadratic(build_objective(k3(), k3())) == Rational(1, 100));
    // ceil(sqrt(4)) = 2 with mu = 5 gives the same radius at n = 4.
    const AdjacencyMatrix c4 =
        AdjacencyMatrix::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const AdjacencyMatrix p4 =
        AdjacencyMatrix::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(delta_for_quadratic(build_objective(c4, p4)) == Rational(1, 100));
    CHECK(delta_for_quadratic(build_objective(edgeless(3), edgeless(3))) ==
          Rational(1, 20));

    std::mt19937_64 rng(3131);
    for (int n : {2, 3, 5, 9}) {
        const QuadraticObjective obj =
            build_objective(random_graph(n, rng), random_graph(n, rng));
        const Rational delta = delta_for_quadratic(obj);
        CHECK(delta > 0);
        CHECK(delta < 1);
    }
}

TEST_CASE("vertex argmax sets of the raw and shifted objectives coincide") {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4;
        const AdjacencyMatrix e1 = random_graph(n, rng);
        const AdjacencyMatrix e2 = random_graph(n, rng);
        const QuadraticObjective obj = build_objective(e1, e2);

        std::vector<int> image(n);
        for (int i = 0; i < n; ++i) image[i] = i;
        Rational best_q = -1, best_f = -1;
        std::vector<std::vector<int>> argmax_q, argmax_f;
        do {
            const RatMatrix x = to_rational(permutation_matrix(Permutation{image}));
            const Rational q = eval_qform(obj, x);
            const Rational f = eval_f(obj, x);
            CHECK(f == q + Rational(obj.mu) * n);
            if (q > best_q) {
                best_q = q;
                argmax_q.clear();
            }
            if (q == best_q) argmax_q.push_back(image);
            if (f > best_f) {
                best_f = f;
                argmax_f.clear();
            }
            if (f == best_f) argmax_f.push_back(image);
        } while (std::next_permutation(image.begin(), image.end()));
        CHECK(argmax_q == argmax_f);
        CHECK(best_f == best_q + Rational(obj.mu) * n);
    }
}

TEST_CASE("the shifted objective is integral and nonnegative on vertices") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5;
        const QuadraticObjective obj =
            build_objective(random_graph(n, rng), random_graph(n, rng));
        const RatMatrix x =
            to_rational(permutation_matrix(random_permutation(n, rng)));
        const Rational f = eval_f(obj, x);
        CHECK(is_integer(f));
        CHECK(f >= 0);
    }
}

TEST_CASE("nearby points cannot change the objective by a half") {
    std::mt19937_64 rng(600);
    std::uniform_int_distribution<int> entry(-100, 100);
    std::uniform_int_distribution<int> radius_num(1, 99);
    for (int n : {3, 4}) {
        const QuadraticObjective obj =
            build_objective(random_graph(n, rng), random_graph(n, rng));
        const Rational delta = delta_for_quadratic(obj);
        const GmObjective f(obj);
        const RatMatrix x =
            to_rational(permutation_matrix(random_permutation(n, rng)));
        for (int trial = 0; trial < 100; ++trial) {
            RatVector direction(n * n);
            Integer sum_squares = 0;
            for (int k = 0; k < n * n; ++k) {
                const int e = entry(rng);
                direction(k) = e;
                sum_squares += Integer(e) * e;
            }
            if (sum_squares == 0) continue;
            // Scale so the move has exact norm < delta: delta * r / K with
            // K = floor(sqrt(sum_squares)) + 1 > sqrt(sum_squares), r <= 1.
            const Integer k_scale = isqrt(sum_squares) + 1;
            const Rational scale =
                delta * Rational(radius_num(rng), 100) / Rational(k_scale);
            RatMatrix y = x;
            for (int k = 0; k < n * n; ++k) {
                y(k / n, k % n) += scale * direction(k);
            }
            const Rational gap = abs(f.evaluate(x) - f.evaluate(y));
            CHECK(gap < Rational(1, 2));
        }
    }
}

TEST_CASE("midpoints never beat the average of the endpoints") {
    std::mt19937_64 rng(404);
    const QuadraticObjective obj = build_objective(k3(), p3());
    const GmObjective f(obj);
    for (int trial = 0; trial < 30; ++trial) {
        const RatMatrix u =
            to_rational(permutation_matrix(random_permutation(3, rng)));
        const RatMatrix v =
            to_rational(permutation_matrix(random_permutation(3, rng)));
        RatMatrix mid = u;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) mid(i, j) = (u(i, j) + v(i, j)) / 2;
        CHECK(f.evaluate(mid) * 2 <= f.evaluate(u) + f.evaluate(v));
    }
}

TEST_CASE("separable quadratic objective") {
    RatMatrix quad(2, 2), linear(2, 2);
    quad << Rational(1001, 1000), 1, 1, Rational(1001, 1000);
    linear << 0, Rational(3, 5000), Rational(3, 5000), 0;
    const SeparableQuadraticObjective obj(quad, linear);

    RatMatrix x(2, 2);
    x << Rational(999, 2000), Rational(1, 1000), Rational(1001, 2000), 0;
    // f = .0006(x12+x21) + 1.001 x11^2 + x12^2 + x21^2 + 1.001 x22^2
    const Rational expected =
        Rational(3, 5000) * (Rational(1, 1000) + Rational(1001, 2000)) +
        Rational(1001, 1000) * Rational(999, 2000) * Rational(999, 2000) +
        Rational(1, 1000) * Rational(1, 1000) +
        Rational(1001, 2000) * Rational(1001, 2000);
    CHECK(obj.evaluate(x) == expected);

    RatMatrix negative = quad;
    negative(0, 0) = -1;
    CHECK_THROWS_AS(SeparableQuadraticObjective(negative, linear), Error);
}
