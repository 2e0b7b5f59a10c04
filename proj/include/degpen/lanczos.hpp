#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace degpen {

// y = A x for a symmetric operator A.
using LinearOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

struct LanczosOptions {
    std::size_t nev = 1;         // wanted eigenpairs
    std::size_t ncv = 0;         // basis size, 0 picks a default from nev
    double tol = 1e-8;           // ||A x - theta x|| <= tol for unit x
    std::size_t max_matvecs = 0; // 0 means 10 n
    std::uint64_t seed = 0;      // start vector
};

struct Eigenpairs {
    std::vector<double> values;       // descending
    Eigen::MatrixXd vectors;          // n x nev, orthonormal columns
    std::vector<double> residuals;    // explicit ||A x - theta x||
    std::size_t matvecs = 0;
    std::size_t restarts = 0;
};

// Algebraically largest eigenpairs of a symmetric operator by thick-restart
// Lanczos with full reorthogonalization. Throws ConvergenceError once the
// matvec budget is spent.
Eigenpairs largest_eigenpairs(std::size_t n, const LinearOperator& op, const LanczosOptions& opts);

// Same contract via a dense eigendecomposition of the explicit matrix.
Eigenpairs largest_eigenpairs_dense(const Eigen::MatrixXd& a, std::size_t nev);

}  // namespace degpen
