#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "degpen/embedding.hpp"
#include "degpen/graph.hpp"
#include "degpen/sparse_matrix.hpp"

namespace degpen {

enum class SpectralMode {
    DegreePenalty,  // weights W = D^-beta C' D^-beta
    Laplacian,      // plain Laplacian eigenmaps, weights A, beta ignored
};

enum class EigenSolver { Auto, Lanczos, Dense };

struct SpectralConfig {
    std::size_t k = 200;
    double beta = 1.0;
    double tol = 1e-8;
    std::size_t max_iter = 0;  // operator applications, 0 means 10 n
    SpectralMode mode = SpectralMode::DegreePenalty;
    std::uint64_t seed = 0;    // Lanczos start vector
    EigenSolver solver = EigenSolver::Auto;
};

struct SpectralResult {
    Embedding embedding;
    // Normalized-Laplacian eigenvalues of the returned columns, ascending.
    std::vector<double> eigenvalues;
    // The discarded smallest eigenvalue (0 up to solver tolerance).
    double trivial_eigenvalue = 0.0;
    // ||L t - lambda t|| per returned column (unit t).
    std::vector<double> residuals;
    std::size_t matvecs = 0;
};

// L = I - S^-1/2 W S^-1/2 where S is the diagonal of W's row sums. Throws
// when a row sum is zero.
SparseMatrix normalized_laplacian(const SparseMatrix& w);
SparseMatrix normalized_laplacian(const SparseMatrix& w, const Graph& g);

// Minimizes sum_ij W_ij ||u_i - u_j||^2 subject to U^T S U = I, with U
// orthogonal to the constant vector under S. Computes the k + 1 smallest
// normalized-Laplacian eigenpairs, drops the smallest, and returns rows of
// S^-1/2 T. W is applied implicitly through the graph, so C' is never formed.
SpectralResult embed_spectral(const Graph& g, const SpectralConfig& cfg);

// Same, for an explicitly materialized weight matrix (cfg.mode and cfg.beta
// are ignored).
SpectralResult embed_spectral(const Graph& g, const SparseMatrix& weights, const SpectralConfig& cfg);

// sum_ij W_ij ||u_i - u_j||^2, which equals 2 trace(U^T (S - W) U).
double spectral_objective(const SparseMatrix& w, const Embedding& u);

}  // namespace degpen
