#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <vector>

#include "degpen/graph.hpp"

namespace degpen {

// Square sparse real matrix in CSR form with sorted column indices. Symmetric
// matrices store both triangles. Explicit zeros are never stored.
class SparseMatrix {
public:
    SparseMatrix() = default;

    // Entries may come in any order; duplicates are summed and zeros dropped.
    static SparseMatrix from_triplets(std::size_t n,
                                      std::vector<std::tuple<VertexId, VertexId, double>> triplets);

    // Takes ownership of ready-made CSR arrays. Column indices must be sorted
    // per row and values nonzero.
    static SparseMatrix from_csr(std::size_t n, std::vector<std::size_t> row_ptr,
                                 std::vector<VertexId> cols, std::vector<double> values);

    std::size_t dim() const noexcept { return row_ptr_.size() - 1; }
    std::size_t nnz() const noexcept { return cols_.size(); }
    double density() const noexcept;

    std::span<const VertexId> row_cols(std::size_t i) const noexcept {
        return {cols_.data() + row_ptr_[i], cols_.data() + row_ptr_[i + 1]};
    }
    std::span<const double> row_values(std::size_t i) const noexcept {
        return {values_.data() + row_ptr_[i], values_.data() + row_ptr_[i + 1]};
    }

    // Entry lookup by binary search; 0 when not stored.
    double at(std::size_t i, std::size_t j) const noexcept;

    std::vector<double> row_sums() const;

    // y = M x
    void multiply(std::span<const double> x, std::span<double> y) const;

    // max |M_ij - M_ji| / max |M_ij|, 0 for an empty matrix.
    double asymmetry() const;

private:
    std::vector<std::size_t> row_ptr_{0};
    std::vector<VertexId> cols_;
    std::vector<double> values_;
};

}  // namespace degpen
