#include "degpen/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "degpen/error.hpp"

namespace degpen {

SparseMatrix SparseMatrix::from_triplets(std::size_t n,
                                         std::vector<std::tuple<VertexId, VertexId, double>> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    std::vector<std::size_t> row_ptr(n + 1, 0);
    std::vector<VertexId> cols;
    std::vector<double> values;
    std::size_t i = 0;
    while (i < triplets.size()) {
        auto [r, c, v] = triplets[i];
        if (r >= n || c >= n) throw Error("sparse matrix entry out of range");
        double sum = v;
        std::size_t j = i + 1;
        while (j < triplets.size() && std::get<0>(triplets[j]) == r && std::get<1>(triplets[j]) == c)
            sum += std::get<2>(triplets[j++]);
        if (sum != 0.0) {
            cols.push_back(c);
            values.push_back(sum);
            ++row_ptr[r + 1];
        }
        i = j;
    }
    for (std::size_t r = 0; r < n; ++r) row_ptr[r + 1] += row_ptr[r];
    return from_csr(n, std::move(row_ptr), std::move(cols), std::move(values));
}

SparseMatrix SparseMatrix::from_csr(std::size_t n, std::vector<std::size_t> row_ptr,
                                    std::vector<VertexId> cols, std::vector<double> values) {
    if (row_ptr.size() != n + 1 || cols.size() != values.size() || row_ptr.back() != cols.size())
        throw Error("inconsistent CSR arrays");
    SparseMatrix m;
    m.row_ptr_ = std::move(row_ptr);
    m.cols_ = std::move(cols);
    m.values_ = std::move(values);
    return m;
}

double SparseMatrix::density() const noexcept {
    const double n = static_cast<double>(dim());
    return n == 0 ? 0.0 : static_cast<double>(nnz()) / (n * n);
}

double SparseMatrix::at(std::size_t i, std::size_t j) const noexcept {
    auto c = row_cols(i);
    auto it = std::lower_bound(c.begin(), c.end(), static_cast<VertexId>(j));
    if (it == c.end() || *it != j) return 0.0;
    return values_[row_ptr_[i] + static_cast<std::size_t>(it - c.begin())];
}

std::vector<double> SparseMatrix::row_sums() const {
    std::vector<double> s(dim(), 0.0);
    for (std::size_t i = 0; i < dim(); ++i)
        for (double v : row_values(i)) s[i] += v;
    return s;
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    if (x.size() != dim() || y.size() != dim()) throw Error("dimension mismatch in sparse multiply");
    for (std::size_t i = 0; i < dim(); ++i) {
        double acc = 0.0;
        for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) acc += values_[p] * x[cols_[p]];
        y[i] = acc;
    }
}

double SparseMatrix::asymmetry() const {
    double scale = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        auto c = row_cols(i);
        auto v = row_values(i);
        for (std::size_t p = 0; p < c.size(); ++p) {
            scale = std::max(scale, std::abs(v[p]));
            worst = std::max(worst, std::abs(v[p] - at(c[p], i)));
        }
    }
    return scale == 0.0 ? 0.0 : worst / scale;
}

}  // namespace degpen
