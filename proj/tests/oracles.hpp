#pragma once

// Independent, deliberately naive reference computations. Nothing here calls
// into the library except for plain data accessors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "degpen/embedding.hpp"
#include "degpen/graph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense adjacency(const degpen::Graph& g) {
    const std::size_t n = g.num_vertices();
    Dense a(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u)
        for (auto v : g.neighbors(static_cast<degpen::VertexId>(u))) a[u][v] = 1.0;
    return a;
}

// C_ij = sum_k A_ik A_kj for i != j, zero diagonal. Triple loop.
inline Dense common_neighbors(const degpen::Graph& g) {
    auto a = adjacency(g);
    const std::size_t n = a.size();
    Dense c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a[i][k] * a[k][j];
            c[i][j] = s;
        }
    return c;
}

inline Dense penalized_weights(const degpen::Graph& g, double beta) {
    auto a = adjacency(g);
    auto c = common_neighbors(g);
    const std::size_t n = a.size();
    Dense w(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double di = g.degree(static_cast<degpen::VertexId>(i));
            double dj = g.degree(static_cast<degpen::VertexId>(j));
            w[i][j] = (c[i][j] + a[i][j]) / std::pow(di * dj, beta);
        }
    return w;
}

// Degree of every vertex in the epsilon reconstruction straight from
// p = 1 / (1 + e^d).
inline std::vector<std::uint32_t> reconstruct_degrees(const degpen::Embedding& e, double eps) {
    std::vector<std::uint32_t> deg(e.rows(), 0);
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.rows(); ++j) {
            if (i == j) continue;
            double d2 = 0.0;
            for (std::size_t c = 0; c < e.dim(); ++c) d2 += (e(i, c) - e(j, c)) * (e(i, c) - e(j, c));
            if (1.0 / (1.0 + std::exp(std::sqrt(d2))) >= eps) ++deg[i];
        }
    return deg;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i] / n, my += y[i] / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// Rank of x[i]: 1 + (# strictly smaller) + (# equal others) / 2.
inline std::vector<double> ranks(const std::vector<double>& x) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double less = 0, equal = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] < x[i]) ++less;
            else if (x[j] == x[i] && j != i) ++equal;
        }
        r[i] = 1.0 + less + equal / 2.0;
    }
    return r;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(ranks(x), ranks(y));
}

// tau-b by counting all pairs.
inline double kendall(const std::vector<double>& x, const std::vector<double>& y) {
    double conc = 0, disc = 0, tx = 0, ty = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            double a = x[i] - x[j], b = y[i] - y[j];
            if (a == 0 && b == 0) continue;
            if (a == 0) ++tx;
            else if (b == 0) ++ty;
            else if ((a > 0) == (b > 0)) ++conc;
            else ++disc;
        }
    return (conc - disc) / std::sqrt((conc + disc + tx) * (conc + disc + ty));
}

// Inverse-CDF draws from the discrete law with survival function
// Pr(D >= d) = ((d - 1/2) / (d_min - 1/2))^(1 - alpha), d >= d_min.
inline std::vector<double> sample_power_law(std::size_t count, double alpha, double d_min, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> out(count);
    for (auto& d : out) {
        double u = 1.0 - unif(gen);  // (0, 1]
        // Largest d with survival(d) >= u.
        double x = (d_min - 0.5) * std::pow(u, 1.0 / (1.0 - alpha)) + 0.5;
        d = std::max(d_min, std::floor(x));
    }
    return out;
}

// Exact Pr(j | i) from the dense penalized weights.
inline std::vector<double> transition_row(const degpen::Graph& g, double beta, std::size_t i) {
    auto w = penalized_weights(g, beta);
    std::vector<double> row = w[i];
    double s = 0.0;
    for (double x : row) s += x;
    for (double& x : row) x /= s;
    return row;
}

inline degpen::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<degpen::VertexId, degpen::VertexId>> edges;
    for (degpen::VertexId u = 0; u < n; ++u)
        for (degpen::VertexId v = u + 1; v < n; ++v)
            if (coin(gen)) edges.emplace_back(u, v);
    // A spanning path keeps the graph connected.
    for (degpen::VertexId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return degpen::Graph::from_edges(n, edges);
}

inline degpen::Graph star(std::size_t leaves) {
    std::vector<std::pair<degpen::VertexId, degpen::VertexId>> edges;
    for (degpen::VertexId l = 1; l <= leaves; ++l) edges.emplace_back(0, l);
    return degpen::Graph::from_edges(leaves + 1, edges);
}

}  // namespace oracle
