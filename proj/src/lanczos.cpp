#include "degpen/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <spdlog/spdlog.h>

#include "degpen/error.hpp"
#include "degpen/rng.hpp"

namespace degpen {

namespace {

void apply(const LinearOperator& op, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    op(std::span<const double>(x.data(), x.size()), std::span<double>(y.data(), y.size()));
}

// Orthogonalizes w against the first `cols` columns of V twice (CGS2) and
// returns the accumulated projection coefficients.
Eigen::VectorXd orthogonalize(const Eigen::MatrixXd& V, Eigen::Index cols, Eigen::VectorXd& w) {
    auto basis = V.leftCols(cols);
    Eigen::VectorXd h = basis.transpose() * w;
    w.noalias() -= basis * h;
    Eigen::VectorXd h2 = basis.transpose() * w;
    w.noalias() -= basis * h2;
    return h + h2;
}

Eigen::VectorXd random_unit(Eigen::Index n, Rng& rng) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.uniform(-1.0, 1.0);
    return v / v.norm();
}

// Thick-restart Lanczos for the top opts.nev eigenpairs. With a nonempty
// `locked` basis the search runs in its orthogonal complement.
Eigenpairs thick_restart(std::size_t n, const LinearOperator& op, const LanczosOptions& opts,
                         const Eigen::MatrixXd& locked, std::size_t budget);

}  // namespace

// A single Krylov sequence sees only one direction of each eigenspace, so a
// repeated eigenvalue would be returned once. After convergence the search is
// repeated orthogonally to the converged vectors; anything it finds above the
// smallest kept value is merged in, until nothing is found.
Eigenpairs largest_eigenpairs(std::size_t n, const LinearOperator& op, const LanczosOptions& opts) {
    const std::size_t budget = opts.max_matvecs ? opts.max_matvecs : 10 * n;
    Eigenpairs out = thick_restart(n, op, opts, Eigen::MatrixXd(), budget);
    const auto nev = static_cast<Eigen::Index>(opts.nev);
    for (std::uint64_t round = 1; static_cast<Eigen::Index>(opts.nev) + 1 < static_cast<Eigen::Index>(n); ++round) {
        LanczosOptions probe = opts;
        probe.nev = 1;
        probe.ncv = 0;
        probe.seed = derive_seed(opts.seed, {0xdef1, round});
        const std::size_t left = budget > out.matvecs ? budget - out.matvecs : 0;
        Eigenpairs extra;
        try {
            extra = thick_restart(n, op, probe, out.vectors, std::max<std::size_t>(left, 1));
        } catch (const ConvergenceError& e) {
            spdlog::warn("lanczos: could not rule out repeated eigenvalues (residual {:.3e})", e.residual());
            break;
        }
        out.matvecs += extra.matvecs;
        out.restarts += extra.restarts;
        if (extra.values[0] <= out.values.back() + opts.tol) break;

        // Insert the new pair in order and drop the smallest.
        auto pos = static_cast<Eigen::Index>(
            std::upper_bound(out.values.begin(), out.values.end(), extra.values[0], std::greater<>()) -
            out.values.begin());
        Eigen::MatrixXd merged(out.vectors.rows(), nev);
        merged.leftCols(pos) = out.vectors.leftCols(pos);
        merged.col(pos) = extra.vectors.col(0);
        merged.rightCols(nev - pos - 1) = out.vectors.middleCols(pos, nev - pos - 1);
        out.vectors = std::move(merged);
        out.values.insert(out.values.begin() + pos, extra.values[0]);
        out.values.pop_back();
        out.residuals.insert(out.residuals.begin() + pos, extra.residuals[0]);
        out.residuals.pop_back();
        spdlog::debug("lanczos: recovered a repeated eigenvalue {:.12g}", extra.values[0]);
    }
    return out;
}

namespace {

Eigenpairs thick_restart(std::size_t n, const LinearOperator& raw_op, const LanczosOptions& opts,
                         const Eigen::MatrixXd& locked, std::size_t budget) {
    const auto N = static_cast<Eigen::Index>(n);
    const auto nev = static_cast<Eigen::Index>(opts.nev);
    if (nev < 1 || nev >= N) throw Error("Lanczos needs 1 <= nev < n");
    Eigen::Index ncv = opts.ncv ? static_cast<Eigen::Index>(opts.ncv) : std::max(2 * nev + 20, nev + 40);
    ncv = std::min(ncv, N);
    if (ncv <= nev) throw Error("Lanczos basis size must exceed nev");

    Rng rng(derive_seed(opts.seed, {0x1a2c}));
    // x -> P A P x with P the projector onto the complement of `locked`.
    LinearOperator deflated;
    if (locked.cols() > 0) {
        deflated = [&](std::span<const double> x, std::span<double> y) {
            Eigen::Map<const Eigen::VectorXd> xv(x.data(), N);
            Eigen::Map<Eigen::VectorXd> yv(y.data(), N);
            Eigen::VectorXd px = xv - locked * (locked.transpose() * xv);
            raw_op(std::span<const double>(px.data(), n), y);
            yv -= locked * (locked.transpose() * yv);
        };
    }
    const LinearOperator& op = locked.cols() > 0 ? deflated : raw_op;
    auto start = [&] {
        Eigen::VectorXd v = random_unit(N, rng);
        if (locked.cols() > 0) {
            v -= locked * (locked.transpose() * v);
            v -= locked * (locked.transpose() * v);
            v /= v.norm();
        }
        return v;
    };

    Eigen::MatrixXd V(N, ncv + 1);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(ncv, ncv);
    V.col(0) = start();

    Eigen::VectorXd w(N);
    Eigen::Index kept = 0;
    double last_beta = 0.0;
    Eigenpairs out;

    while (true) {
        for (Eigen::Index j = kept; j < ncv; ++j) {
            Eigen::VectorXd vj = V.col(j);
            apply(op, vj, w);
            ++out.matvecs;
            Eigen::VectorXd h = orthogonalize(V, j + 1, w);
            // Column j of the Rayleigh quotient V^T A V. Kept Ritz values
            // stay on the diagonal; their coupling appears at column `kept`.
            for (Eigen::Index i = 0; i <= j; ++i) H(i, j) = H(j, i) = h[i];
            double beta = w.norm();
            if (beta <= 1e-12 * std::max(1.0, std::abs(H(j, j)))) {
                // Invariant subspace: continue with a fresh orthogonal direction.
                Eigen::VectorXd r = start();
                orthogonalize(V, j + 1, r);
                w = r / r.norm();
                beta = 0.0;
                V.col(j + 1) = w;
            } else {
                V.col(j + 1) = w / beta;
            }
            last_beta = beta;
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
        if (es.info() != Eigen::Success) throw Error("projected eigenproblem failed");
        // Eigen sorts ascending; we want the top end.
        Eigen::VectorXd theta = es.eigenvalues().reverse();
        Eigen::MatrixXd Y = es.eigenvectors().rowwise().reverse();

        double worst = 0.0;
        for (Eigen::Index i = 0; i < nev; ++i)
            worst = std::max(worst, std::abs(last_beta * Y(ncv - 1, i)));

        if (worst <= opts.tol) {
            Eigen::MatrixXd X = V.leftCols(ncv) * Y.leftCols(nev);
            std::vector<double> res(nev);
            double true_worst = 0.0;
            Eigen::VectorXd ax(N);
            for (Eigen::Index i = 0; i < nev; ++i) {
                Eigen::VectorXd x = X.col(i);
                apply(op, x, ax);
                res[i] = (ax - theta[i] * x).norm();
                true_worst = std::max(true_worst, res[i]);
            }
            out.matvecs += nev;
            if (true_worst <= opts.tol) {
                out.values.assign(theta.data(), theta.data() + nev);
                out.vectors = std::move(X);
                out.residuals = std::move(res);
                spdlog::debug("lanczos: nev={} ncv={} matvecs={} restarts={}", nev, ncv, out.matvecs,
                              out.restarts);
                return out;
            }
            worst = true_worst;
        }
        if (out.matvecs >= budget)
            throw ConvergenceError("eigensolver did not converge within " + std::to_string(budget) +
                                       " operator applications",
                                   worst);

        // Thick restart: keep the leading Ritz vectors plus the residual direction.
        kept = std::min(ncv - 1, nev + (ncv - nev) / 2);
        Eigen::MatrixXd ritz = V.leftCols(ncv) * Y.leftCols(kept);
        V.col(kept) = V.col(ncv);
        V.leftCols(kept) = ritz;
        H.setZero();
        for (Eigen::Index i = 0; i < kept; ++i) H(i, i) = theta[i];
        ++out.restarts;
    }
}

}  // namespace

Eigenpairs largest_eigenpairs_dense(const Eigen::MatrixXd& a, std::size_t nev) {
    const auto N = a.rows();
    if (nev < 1 || static_cast<Eigen::Index>(nev) > N) throw Error("dense eigensolve needs 1 <= nev <= n");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success) throw Error("dense eigendecomposition failed");
    Eigenpairs out;
    const auto k = static_cast<Eigen::Index>(nev);
    out.vectors.resize(N, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        Eigen::Index src = N - 1 - i;
        out.values.push_back(es.eigenvalues()[src]);
        out.vectors.col(i) = es.eigenvectors().col(src);
        out.residuals.push_back((a * out.vectors.col(i) - out.values.back() * out.vectors.col(i)).norm());
    }
    return out;
}

}  // namespace degpen
