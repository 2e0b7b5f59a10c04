#include "degpen/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "degpen/error.hpp"

namespace degpen {

namespace {

constexpr Eigen::Index kBlock = 512;

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    return s;
}

void check_epsilon(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error("epsilon must lie in (0, 1]");
}

}  // namespace

double edge_probability(std::span<const double> ui, std::span<const double> uj) {
    if (ui.size() != uj.size()) throw Error("embedding vectors differ in dimension");
    return 1.0 / (1.0 + std::exp(std::sqrt(squared_distance(ui, uj))));
}

double distance_threshold(double epsilon) {
    check_epsilon(epsilon);
    return std::log(1.0 / epsilon - 1.0);
}

std::vector<std::vector<std::uint32_t>> reconstruct_degrees(const Embedding& emb,
                                                            std::span<const double> epsilons) {
    const auto n = static_cast<Eigen::Index>(emb.rows());
    const auto k = static_cast<Eigen::Index>(emb.dim());
    const std::size_t m = epsilons.size();

    // Reachable thresholds sorted by decreasing squared distance, i.e.
    // increasing epsilon. Unreachable ones (epsilon > 0.5) stay all-zero.
    std::vector<std::size_t> order;
    for (std::size_t e = 0; e < m; ++e) {
        check_epsilon(epsilons[e]);
        if (distance_threshold(epsilons[e]) >= 0.0) order.push_back(e);
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return epsilons[a] < epsilons[b]; });
    const std::size_t r = order.size();
    std::vector<double> t2(r);  // descending
    for (std::size_t q = 0; q < r; ++q) {
        double t = distance_threshold(epsilons[order[q]]);
        t2[q] = t * t;
    }

    Eigen::Map<const RowMatrix> U(emb.values().data(), n, k);
    Eigen::VectorXd sq = U.rowwise().squaredNorm();
    // meets[i * (r + 1) + q]: pairs of i meeting exactly the first q thresholds.
    std::vector<std::uint32_t> meets(static_cast<std::size_t>(n) * (r + 1), 0);
    auto hits = [&](std::size_t i, std::size_t j, double d2, double norms) -> std::size_t {
        // Number of thresholds this squared distance satisfies (t2 descending).
        auto it = std::partition_point(t2.begin(), t2.end(), [&](double t) { return d2 <= t; });
        std::size_t q = static_cast<std::size_t>(it - t2.begin());
        // Re-evaluate exactly when rounding could flip the neighbouring thresholds.
        auto close = [&](std::size_t idx) {
            if (idx >= r) return false;
            return std::abs(d2 - t2[idx]) <= 1e-9 * std::max(t2[idx], d2) + 1e-12 * norms;
        };
        if (close(q) || (q > 0 && close(q - 1))) {
            double p = edge_probability(emb.row(i), emb.row(j));
            q = 0;
            while (q < r && p >= epsilons[order[q]]) ++q;
        }
        return q;
    };

    Eigen::MatrixXd gram;
    for (Eigen::Index i0 = 0; i0 < n; i0 += kBlock) {
        const Eigen::Index bi = std::min(kBlock, n - i0);
        for (Eigen::Index j0 = i0; j0 < n; j0 += kBlock) {
            const Eigen::Index bj = std::min(kBlock, n - j0);
            gram.noalias() = U.middleRows(i0, bi) * U.middleRows(j0, bj).transpose();
            for (Eigen::Index a = 0; a < bi; ++a) {
                const Eigen::Index i = i0 + a;
                for (Eigen::Index b = (j0 == i0 ? a + 1 : 0); b < bj; ++b) {
                    const Eigen::Index j = j0 + b;
                    double d2 = std::max(0.0, sq[i] + sq[j] - 2.0 * gram(a, b));
                    std::size_t q = hits(i, j, d2, sq[i] + sq[j]);
                    ++meets[i * (r + 1) + q];
                    ++meets[j * (r + 1) + q];
                }
            }
        }
    }

    std::vector<std::vector<std::uint32_t>> out(m, std::vector<std::uint32_t>(n, 0));
    for (Eigen::Index i = 0; i < n; ++i) {
        // A pair with q hits satisfies thresholds 0..q-1; degree at threshold
        // s counts pairs with q > s.
        std::uint32_t above = 0;
        for (std::size_t s = r; s-- > 0;) {
            above += meets[i * (r + 1) + s + 1];
            out[order[s]][i] = above;
        }
    }
    return out;
}

std::vector<std::uint32_t> reconstruct_degrees(const Embedding& emb, double epsilon) {
    const double eps[] = {epsilon};
    return std::move(reconstruct_degrees(emb, eps).front());
}

std::vector<std::pair<VertexId, VertexId>> reconstruct_edges(const Embedding& emb, double epsilon) {
    check_epsilon(epsilon);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < emb.rows(); ++i)
        for (std::size_t j = i + 1; j < emb.rows(); ++j)
            if (edge_probability(emb.row(i), emb.row(j)) >= epsilon)
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return edges;
}

std::vector<double> epsilon_grid(double start, double end, double step) {
    if (!(step > 0.0) || !(start > 0.0) || !(end <= 1.0) || start > end)
        throw Error("epsilon grid needs 0 < start <= end <= 1 and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    return grid;
}

SweepResult sweep_epsilon(const Embedding& emb_in, const Graph& g, double start, double end, double step) {
    const Embedding emb = align_to_graph(emb_in, g);
    auto grid = epsilon_grid(start, end, step);
    auto degrees = reconstruct_degrees(emb, grid);
    std::vector<double> original(g.degrees().begin(), g.degrees().end());

    SweepResult out;
    std::size_t best = grid.size();
    std::vector<double> rec(original.size());
    for (std::size_t e = 0; e < grid.size(); ++e) {
        std::copy(degrees[e].begin(), degrees[e].end(), rec.begin());
        SweepRow row;
        row.epsilon = grid[e];
        row.correlations = degree_correlations(original, rec);
        row.edge_count = std::accumulate(degrees[e].begin(), degrees[e].end(), std::uint64_t{0}) / 2;
        if (row.correlations.defined &&
            (best == grid.size() || row.correlations.pearson > out.table[best].correlations.pearson))
            best = e;
        out.table.push_back(row);
    }
    out.degenerate = best == grid.size();
    if (out.degenerate) best = 0;
    out.best.epsilon = grid[best];
    out.best.degrees = std::move(degrees[best]);
    out.best.correlations = out.table[best].correlations;
    out.best.edge_count = out.table[best].edge_count;
    return out;
}

void write_sweep_table(std::ostream& out, const SweepResult& sweep) {
    out << "epsilon,pearson,spearman,kendall,edge_count\n";
    for (const auto& row : sweep.table) {
        const auto& c = row.correlations;
        out << fmt::format("{:.4f},{:.17g},{:.17g},{:.17g},{}\n", row.epsilon, c.pearson, c.spearman, c.kendall,
                           row.edge_count);
    }
}

void write_sweep_table_file(const std::string& path, const SweepResult& sweep) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write sweep table '" + path + "'");
    write_sweep_table(out, sweep);
}

}  // namespace degpen
