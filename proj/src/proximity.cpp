#include "degpen/proximity.hpp"

#include <algorithm>
#include <cmath>

#include <spdlog/spdlog.h>

namespace degpen {

namespace {

// Builds a matrix row by row from proximity_row(), mapping each (j, count)
// through value(i, j, count).
template <typename ValueFn>
SparseMatrix build_rows(const Graph& g, ValueFn value) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> row_ptr(n + 1, 0);
    std::vector<VertexId> cols;
    std::vector<double> vals;
    for (VertexId i = 0; i < n; ++i) {
        for (auto [j, count] : proximity_row(g, i)) {
            double v = value(i, j, count);
            if (v == 0.0) continue;
            cols.push_back(j);
            vals.push_back(v);
        }
        row_ptr[i + 1] = cols.size();
    }
    auto m = SparseMatrix::from_csr(n, std::move(row_ptr), std::move(cols), std::move(vals));
    spdlog::debug("proximity matrix: n={} nnz={} density={:.4f}", n, m.nnz(), m.density());
    return m;
}

}  // namespace

std::vector<std::pair<VertexId, std::uint32_t>> proximity_row(const Graph& g, VertexId v) {
    // Dense scratch per call keeps this allocation-light for repeated rows.
    thread_local std::vector<std::uint32_t> counts;
    thread_local std::vector<VertexId> touched;
    counts.resize(g.num_vertices(), 0);
    touched.clear();

    auto bump = [&](VertexId j) {
        if (counts[j]++ == 0) touched.push_back(j);
    };
    for (VertexId x : g.neighbors(v)) {
        bump(x);
        for (VertexId j : g.neighbors(x))
            if (j != v) bump(j);
    }
    std::sort(touched.begin(), touched.end());
    std::vector<std::pair<VertexId, std::uint32_t>> row;
    row.reserve(touched.size());
    for (VertexId j : touched) {
        row.emplace_back(j, counts[j]);
        counts[j] = 0;
    }
    return row;
}

SparseMatrix common_neighbor_matrix(const Graph& g) {
    return build_rows(g, [&](VertexId i, VertexId j, std::uint32_t cp) {
        return static_cast<double>(cp) - (g.has_edge(i, j) ? 1.0 : 0.0);
    });
}

SparseMatrix proximity_matrix(const Graph& g) {
    return build_rows(g, [](VertexId, VertexId, std::uint32_t cp) { return static_cast<double>(cp); });
}

SparseMatrix penalized_weight_matrix(const Graph& g, double beta) {
    if (beta == 0.0) return proximity_matrix(g);
    auto pen = degree_penalty(g, beta);
    return build_rows(g, [&](VertexId i, VertexId j, std::uint32_t cp) {
        return static_cast<double>(cp) * (pen[i] * pen[j]);
    });
}

SparseMatrix adjacency_matrix(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> row_ptr(g.offsets().begin(), g.offsets().end());
    std::vector<VertexId> cols;
    cols.reserve(2 * g.num_edges());
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j : g.neighbors(i)) cols.push_back(j);
    std::vector<double> vals(cols.size(), 1.0);
    return SparseMatrix::from_csr(n, std::move(row_ptr), std::move(cols), std::move(vals));
}

std::vector<double> degree_penalty(const Graph& g, double beta) {
    std::vector<double> pen(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        pen[v] = std::pow(static_cast<double>(g.degree(v)), -beta);
    return pen;
}

}  // namespace degpen
