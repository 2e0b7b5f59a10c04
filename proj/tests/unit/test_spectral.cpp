#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "degpen/error.hpp"
#include "degpen/generator.hpp"
#include "degpen/lanczos.hpp"
#include "degpen/proximity.hpp"
#include "degpen/spectral.hpp"
#include "oracles.hpp"

using namespace degpen;

namespace {

Eigen::MatrixXd dense(const SparseMatrix& m) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        auto c = m.row_cols(i);
        auto v = m.row_values(i);
        for (std::size_t k = 0; k < c.size(); ++k) d(i, c[k]) = v[k];
    }
    return d;
}

Eigen::MatrixXd as_matrix(const Embedding& e) {
    Eigen::MatrixXd u(e.rows(), e.dim());
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.dim(); ++j) u(i, j) = e(i, j);
    return u;
}

Graph triangle() {
    return Graph::from_edges(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {0, 2}});
}

// U^T D U with D the row sums of w.
Eigen::MatrixXd gram_d(const SparseMatrix& w, const Embedding& e) {
    auto s = w.row_sums();
    Eigen::MatrixXd u = as_matrix(e);
    Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(s.data(), static_cast<Eigen::Index>(s.size()));
    return u.transpose() * d.asDiagonal() * u;
}

}  // namespace

TEST_SUITE("lanczos") {

TEST_CASE("diagonal operator with a known spectrum") {
    const std::size_t n = 500;
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = std::cos(0.37 * double(i)) + 0.001 * double(i);
    auto op = [&](std::span<const double> x, std::span<double> y) {
        for (std::size_t i = 0; i < n; ++i) y[i] = diag[i] * x[i];
    };
    LanczosOptions opts;
    opts.nev = 12;
    opts.tol = 1e-10;
    auto res = largest_eigenpairs(n, op, opts);
    auto sorted = diag;
    std::sort(sorted.rbegin(), sorted.rend());
    REQUIRE(res.values.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(res.values[i] == doctest::Approx(sorted[i]).epsilon(1e-9));
        CHECK(res.residuals[i] <= 1e-10);
    }
    Eigen::MatrixXd gram = res.vectors.transpose() * res.vectors;
    CHECK((gram - Eigen::MatrixXd::Identity(12, 12)).norm() < 1e-10);
}

TEST_CASE("repeated eigenvalues are all found") {
    const std::size_t n = 300;
    std::vector<double> diag(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) diag[i] = double(i % 50) / 50.0;  // top value repeated 6 times
    auto op = [&](std::span<const double> x, std::span<double> y) {
        for (std::size_t i = 0; i < n; ++i) y[i] = diag[i] * x[i];
    };
    LanczosOptions opts;
    opts.nev = 8;
    auto res = largest_eigenpairs(n, op, opts);
    for (std::size_t i = 0; i < 6; ++i) CHECK(res.values[i] == doctest::Approx(49.0 / 50.0).epsilon(1e-9));
    CHECK(res.values[6] == doctest::Approx(48.0 / 50.0).epsilon(1e-9));
}

TEST_CASE("budget exhaustion raises a convergence error with the residual") {
    const std::size_t n = 400;
    auto op = [&](std::span<const double> x, std::span<double> y) {
        for (std::size_t i = 0; i < n; ++i) y[i] = (1.0 + 1e-6 * double(i)) * x[i];
    };
    LanczosOptions opts;
    opts.nev = 20;
    opts.tol = 1e-14;
    opts.max_matvecs = 50;
    try {
        largest_eigenpairs(n, op, opts);
        FAIL("expected a convergence error");
    } catch (const ConvergenceError& e) {
        CHECK(e.residual() > 0.0);
    }
}

TEST_CASE("dense reference agrees") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(40, 40);
    a = (a + a.transpose()).eval();
    auto res = largest_eigenpairs_dense(a, 5);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    for (int i = 0; i < 5; ++i) CHECK(res.values[i] == doctest::Approx(es.eigenvalues()(39 - i)).epsilon(1e-12));
}

}  // TEST_SUITE

TEST_SUITE("spectral") {

TEST_CASE("normalized Laplacian of a single edge") {
    auto g = Graph::from_edges(2, std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
    auto l = dense(normalized_laplacian(adjacency_matrix(g)));
    CHECK(l(0, 0) == doctest::Approx(1.0));
    CHECK(l(1, 1) == doctest::Approx(1.0));
    CHECK(l(0, 1) == doctest::Approx(-1.0));
    CHECK(l(1, 0) == doctest::Approx(-1.0));
}

TEST_CASE("square root of the row sums spans the kernel") {
    for (double beta : {0.0, 1.0, 2.0}) {
        auto g = oracle::random_graph(30, 0.15, 4);
        auto w = penalized_weight_matrix(g, beta);
        auto l = normalized_laplacian(w, g);
        auto s = w.row_sums();
        std::vector<double> x(s.size()), y(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) x[i] = std::sqrt(s[i]);
        l.multiply(x, y);
        double worst = 0.0;
        for (double v : y) worst = std::max(worst, std::abs(v));
        CHECK(worst < 1e-12);
        CHECK(l.asymmetry() < 1e-12);
    }
}

TEST_CASE("triangle spectrum") {
    auto l = dense(normalized_laplacian(adjacency_matrix(triangle())));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
    CHECK(es.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(es.eigenvalues()(1) == doctest::Approx(1.5));
    CHECK(es.eigenvalues()(2) == doctest::Approx(1.5));
}

TEST_CASE("zero row sum names the vertex") {
    auto w = SparseMatrix::from_triplets(3, {{0, 1, 1.0}, {1, 0, 1.0}});
    CHECK_THROWS_AS(normalized_laplacian(w), Error);
}

TEST_CASE("triangle embedding satisfies the D constraint") {
    SpectralConfig cfg;
    cfg.k = 1;
    cfg.mode = SpectralMode::Laplacian;
    auto res = embed_spectral(triangle(), cfg);
    REQUIRE(res.embedding.rows() == 3);
    REQUIRE(res.embedding.dim() == 1);
    CHECK(res.eigenvalues.front() == doctest::Approx(1.5));
    CHECK(std::abs(res.trivial_eigenvalue) < 1e-10);
    auto gram = gram_d(adjacency_matrix(triangle()), res.embedding);
    CHECK(std::abs(gram(0, 0) - 1.0) < 1e-6);
}

TEST_CASE("eigenvalues ascending, trivial excluded, constraint and residuals hold") {
    auto g = generate_pa({600, 4, 2});
    for (auto solver : {EigenSolver::Lanczos, EigenSolver::Dense}) {
        SpectralConfig cfg;
        cfg.k = 16;
        cfg.beta = 1.0;
        cfg.solver = solver;
        auto res = embed_spectral(g, cfg);
        REQUIRE(res.eigenvalues.size() == 16);
        CHECK(std::is_sorted(res.eigenvalues.begin(), res.eigenvalues.end()));
        CHECK(res.eigenvalues.front() > 1e-6);
        CHECK(std::abs(res.trivial_eigenvalue) < 1e-8);
        for (double r : res.residuals) CHECK(r <= cfg.tol);
        auto gram = gram_d(penalized_weight_matrix(g, 1.0), res.embedding);
        CHECK((gram - Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-6);
        CHECK(res.embedding.all_finite());
    }
}

TEST_CASE("Lanczos and dense solvers agree") {
    auto g = generate_pa({500, 3, 8});
    SpectralConfig cfg;
    cfg.k = 10;
    cfg.solver = EigenSolver::Lanczos;
    auto a = embed_spectral(g, cfg);
    cfg.solver = EigenSolver::Dense;
    auto b = embed_spectral(g, cfg);
    for (std::size_t i = 0; i < 10; ++i) CHECK(a.eigenvalues[i] == doctest::Approx(b.eigenvalues[i]).epsilon(1e-8));
}

TEST_CASE("implicit operator agrees with the materialized weight matrix") {
    auto g = generate_pa({450, 5, 6});
    SpectralConfig cfg;
    cfg.k = 8;
    cfg.beta = 0.7;
    cfg.solver = EigenSolver::Lanczos;
    auto implicit = embed_spectral(g, cfg);
    auto explicit_w = embed_spectral(g, penalized_weight_matrix(g, 0.7), cfg);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(implicit.eigenvalues[i] == doctest::Approx(explicit_w.eigenvalues[i]).epsilon(1e-8));
}

TEST_CASE("objective beats random D-orthonormal candidates") {
    std::mt19937_64 gen(77);
    std::normal_distribution<double> normal;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto g = oracle::random_graph(25, 0.2, seed);
        const std::size_t n = g.num_vertices(), k = 3;
        SpectralConfig cfg;
        cfg.k = k;
        cfg.beta = 1.0;
        auto res = embed_spectral(g, cfg);
        auto w = penalized_weight_matrix(g, 1.0);
        const double best = spectral_objective(w, res.embedding);
        auto s = w.row_sums();
        Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(s.data(), static_cast<Eigen::Index>(n));
        for (int trial = 0; trial < 100; ++trial) {
            Eigen::MatrixXd z(n, k);
            for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = normal(gen);
            // D-orthogonal to the constant vector, then D-orthonormal.
            for (std::size_t c = 0; c < k; ++c) z.col(c).array() -= d.dot(z.col(c)) / d.sum();
            Eigen::MatrixXd m = z.transpose() * d.asDiagonal() * z;
            Eigen::MatrixXd l = m.llt().matrixL();
            Eigen::MatrixXd y = z * l.transpose().inverse();
            Embedding cand(n, k, std::vector<Label>(g.labels().begin(), g.labels().end()));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0; c < k; ++c) cand(i, c) = y(i, c);
            CHECK(best <= spectral_objective(w, cand) + 1e-9);
        }
    }
}

TEST_CASE("weights A through the general path reproduce Laplacian eigenmaps") {
    auto g = generate_pa({300, 3, 12});
    SpectralConfig cfg;
    cfg.k = 6;
    cfg.mode = SpectralMode::Laplacian;
    auto le = embed_spectral(g, cfg);
    cfg.mode = SpectralMode::DegreePenalty;
    cfg.beta = 0.0;
    auto general = embed_spectral(g, adjacency_matrix(g), cfg);
    for (std::size_t i = 0; i < 6; ++i) CHECK(le.eigenvalues[i] == doctest::Approx(general.eigenvalues[i]).epsilon(1e-8));
    auto a = adjacency_matrix(g);
    CHECK(spectral_objective(a, le.embedding) == doctest::Approx(spectral_objective(a, general.embedding)).epsilon(1e-8));
}

TEST_CASE("deterministic for a fixed seed") {
    auto g = generate_pa({700, 4, 1});
    SpectralConfig cfg;
    cfg.k = 12;
    cfg.seed = 5;
    cfg.solver = EigenSolver::Lanczos;
    CHECK(embed_spectral(g, cfg).embedding == embed_spectral(g, cfg).embedding);
}

TEST_CASE("invalid inputs") {
    SpectralConfig cfg;
    cfg.k = 2;
    CHECK_THROWS_AS(embed_spectral(triangle(), cfg), Error);  // needs n >= k + 2
    auto split = Graph::from_edges(6, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    cfg.k = 1;
    try {
        embed_spectral(split, cfg);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("separately") != std::string::npos);
    }
    cfg.tol = 0.0;
    CHECK_THROWS_AS(embed_spectral(oracle::random_graph(10, 0.3, 1), cfg), Error);
}

TEST_CASE("iteration cap surfaces as a convergence error") {
    auto g = generate_pa({1200, 4, 3});
    SpectralConfig cfg;
    cfg.k = 30;
    cfg.max_iter = 40;
    cfg.solver = EigenSolver::Lanczos;
    CHECK_THROWS_AS(embed_spectral(g, cfg), ConvergenceError);
}

}  // TEST_SUITE
