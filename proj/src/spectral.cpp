#include "degpen/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <spdlog/spdlog.h>

#include "degpen/error.hpp"
#include "degpen/lanczos.hpp"
#include "degpen/proximity.hpp"

namespace degpen {

namespace {

constexpr std::size_t kDenseLimit = 400;

SparseMatrix normalized_laplacian_impl(const SparseMatrix& w, const Graph* g) {
    const std::size_t n = w.dim();
    auto sums = w.row_sums();
    std::vector<double> inv_sqrt(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(sums[i] > 0.0)) {
            std::string who = g ? "vertex " + std::to_string(g->label(static_cast<VertexId>(i)))
                                : "row " + std::to_string(i);
            throw Error(who + " has zero proximity weight; it cannot be normalized");
        }
        inv_sqrt[i] = 1.0 / std::sqrt(sums[i]);
    }
    std::vector<std::tuple<VertexId, VertexId, double>> t;
    t.reserve(w.nnz() + n);
    for (std::size_t i = 0; i < n; ++i) {
        t.emplace_back(i, i, 1.0);
        auto cols = w.row_cols(i);
        auto vals = w.row_values(i);
        for (std::size_t p = 0; p < cols.size(); ++p)
            t.emplace_back(i, cols[p], -vals[p] * (inv_sqrt[i] * inv_sqrt[cols[p]]));
    }
    return SparseMatrix::from_triplets(n, std::move(t));
}

// Connectivity of a matrix's nonzero pattern.
std::size_t pattern_components(const SparseMatrix& w) {
    const std::size_t n = w.dim();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack;
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto u : w.row_cols(v))
                if (!seen[u]) seen[u] = 1, stack.push_back(u);
        }
    }
    return count;
}

void check_config(const Graph& g, const SpectralConfig& cfg) {
    if (cfg.k < 1) throw Error("embedding dimension must be at least 1");
    if (g.num_vertices() < cfg.k + 2)
        throw Error("spectral embedding of dimension " + std::to_string(cfg.k) + " needs at least " +
                    std::to_string(cfg.k + 2) + " vertices");
    if (!(cfg.tol > 0.0)) throw Error("eigensolver tolerance must be positive");
    if (!std::isfinite(cfg.beta)) throw Error("beta must be finite");
}

[[noreturn]] void throw_disconnected(std::size_t components) {
    throw Error("proximity pattern has " + std::to_string(components) +
                " connected components; embed each component separately");
}

// Shared back end: top k+1 eigenpairs of M = S^-1/2 W S^-1/2, i.e. the
// bottom of L = I - M.
SpectralResult solve(const Graph& g, const SpectralConfig& cfg, const std::vector<double>& row_sums,
                     const LinearOperator& weight_op) {
    const std::size_t n = g.num_vertices();
    std::vector<double> inv_sqrt(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(row_sums[i] > 0.0))
            throw Error("vertex " + std::to_string(g.label(static_cast<VertexId>(i))) +
                        " has zero proximity weight; it cannot be normalized");
        inv_sqrt[i] = 1.0 / std::sqrt(row_sums[i]);
    }

    std::vector<double> scratch(n);
    LinearOperator m_op = [&](std::span<const double> x, std::span<double> y) {
        for (std::size_t i = 0; i < n; ++i) scratch[i] = inv_sqrt[i] * x[i];
        weight_op(scratch, y);
        for (std::size_t i = 0; i < n; ++i) y[i] *= inv_sqrt[i];
    };

    const std::size_t nev = cfg.k + 1;
    bool dense = cfg.solver == EigenSolver::Dense ||
                 (cfg.solver == EigenSolver::Auto && (n <= kDenseLimit || 2 * nev + 20 >= n));
    Eigenpairs pairs;
    if (dense) {
        Eigen::MatrixXd m(n, n);
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n), col(n);
        for (std::size_t j = 0; j < n; ++j) {
            e[j] = 1.0;
            m_op(std::span<const double>(e.data(), n), std::span<double>(col.data(), n));
            m.col(j) = col;
            e[j] = 0.0;
        }
        m = 0.5 * (m + m.transpose()).eval();
        pairs = largest_eigenpairs_dense(m, nev);
        pairs.matvecs = n;
    } else {
        LanczosOptions opts;
        opts.nev = nev;
        opts.tol = cfg.tol;
        opts.max_matvecs = cfg.max_iter;
        opts.seed = cfg.seed;
        pairs = largest_eigenpairs(n, m_op, opts);
    }

    // Deterministic sign: largest-magnitude entry of each vector positive.
    for (Eigen::Index c = 0; c < pairs.vectors.cols(); ++c) {
        Eigen::Index arg = 0;
        pairs.vectors.col(c).cwiseAbs().maxCoeff(&arg);
        if (pairs.vectors(arg, c) < 0) pairs.vectors.col(c) *= -1.0;
    }

    SpectralResult out;
    out.matvecs = pairs.matvecs;
    out.trivial_eigenvalue = 1.0 - pairs.values[0];
    Embedding emb(n, cfg.k, std::vector<Label>(g.labels().begin(), g.labels().end()));
    for (std::size_t c = 1; c < nev; ++c) {
        out.eigenvalues.push_back(1.0 - pairs.values[c]);
        out.residuals.push_back(pairs.residuals[c]);
        for (std::size_t i = 0; i < n; ++i) emb(i, c - 1) = inv_sqrt[i] * pairs.vectors(i, c);
    }
    for (double r : out.residuals)
        if (r > cfg.tol) throw ConvergenceError("eigenpair residual above tolerance", r);
    out.embedding = std::move(emb);
    return out;
}

}  // namespace

SparseMatrix normalized_laplacian(const SparseMatrix& w) { return normalized_laplacian_impl(w, nullptr); }

SparseMatrix normalized_laplacian(const SparseMatrix& w, const Graph& g) {
    return normalized_laplacian_impl(w, &g);
}

SpectralResult embed_spectral(const Graph& g, const SpectralConfig& cfg) {
    check_config(g, cfg);
    if (auto [_, comps] = g.connected_components(); comps > 1) throw_disconnected(comps);

    const std::size_t n = g.num_vertices();
    const bool penalized = cfg.mode == SpectralMode::DegreePenalty;
    const auto pen = degree_penalty(g, penalized ? cfg.beta : 0.0);
    std::vector<double> py(n), ay(n);

    // W x = P (A A P x - deg .* P x + A P x) with P = D^-beta; plain A for
    // Laplacian eigenmaps.
    auto adjacency = [&g](std::span<const double> x, std::span<double> y) {
        for (VertexId i = 0; i < g.num_vertices(); ++i) {
            double acc = 0.0;
            for (VertexId j : g.neighbors(i)) acc += x[j];
            y[i] = acc;
        }
    };
    LinearOperator weight_op;
    if (penalized) {
        weight_op = [&](std::span<const double> x, std::span<double> y) {
            for (std::size_t i = 0; i < n; ++i) py[i] = pen[i] * x[i];
            adjacency(py, ay);
            adjacency(ay, y);
            for (std::size_t i = 0; i < n; ++i)
                y[i] = pen[i] * (y[i] - g.degree(static_cast<VertexId>(i)) * py[i] + ay[i]);
        };
    } else {
        weight_op = adjacency;
    }

    std::vector<double> ones(n, 1.0), sums(n);
    weight_op(ones, sums);
    return solve(g, cfg, sums, weight_op);
}

SpectralResult embed_spectral(const Graph& g, const SparseMatrix& weights, const SpectralConfig& cfg) {
    check_config(g, cfg);
    if (weights.dim() != g.num_vertices()) throw Error("weight matrix dimension does not match graph");
    if (auto comps = pattern_components(weights); comps > 1) throw_disconnected(comps);
    LinearOperator weight_op = [&weights](std::span<const double> x, std::span<double> y) {
        weights.multiply(x, y);
    };
    return solve(g, cfg, weights.row_sums(), weight_op);
}

double spectral_objective(const SparseMatrix& w, const Embedding& u) {
    double total = 0.0;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        auto cols = w.row_cols(i);
        auto vals = w.row_values(i);
        auto ui = u.row(i);
        for (std::size_t p = 0; p < cols.size(); ++p) {
            auto uj = u.row(cols[p]);
            double d2 = 0.0;
            for (std::size_t c = 0; c < ui.size(); ++c) d2 += (ui[c] - uj[c]) * (ui[c] - uj[c]);
            total += vals[p] * d2;
        }
    }
    return total;
}

}  // namespace degpen
