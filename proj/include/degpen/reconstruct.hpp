#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degpen/correlation.hpp"
#include "degpen/embedding.hpp"
#include "degpen/graph.hpp"

namespace degpen {

// p_ij = 1 / (1 + exp(||u_i - u_j||)), in (0, 0.5].
double edge_probability(std::span<const double> ui, std::span<const double> uj);

// Largest distance still reconstructed as an edge at threshold epsilon:
// p >= epsilon  <=>  d <= ln(1/epsilon - 1). Negative (never met) for
// epsilon > 0.5, -inf at epsilon = 1.
double distance_threshold(double epsilon);

// degree_i = |{ j != i : p_ij >= epsilon }|. Exact: pair distances come
// from a blocked Gram product and any pair within rounding reach of a
// threshold is re-evaluated directly with edge_probability().
std::vector<std::uint32_t> reconstruct_degrees(const Embedding& emb, double epsilon);

// One degree vector per epsilon, sharing a single pass over the pairs.
std::vector<std::vector<std::uint32_t>> reconstruct_degrees(const Embedding& emb,
                                                            std::span<const double> epsilons);

// Full reconstructed edge set (u < v). Quadratic output; small n only.
std::vector<std::pair<VertexId, VertexId>> reconstruct_edges(const Embedding& emb, double epsilon);

struct ReconstructionReport {
    double epsilon = 0.0;
    std::vector<std::uint32_t> degrees;
    DegreeCorrelations correlations;
    std::uint64_t edge_count = 0;
};

struct SweepRow {
    double epsilon = 0.0;
    DegreeCorrelations correlations;
    std::uint64_t edge_count = 0;
};

struct SweepResult {
    ReconstructionReport best;
    std::vector<SweepRow> table;
    // No grid point produced defined correlations.
    bool degenerate = false;
};

std::vector<double> epsilon_grid(double start, double end, double step);

// Evaluates every grid epsilon and keeps the one maximizing Pearson against
// the graph's degrees; ties go to the smaller epsilon.
SweepResult sweep_epsilon(const Embedding& emb, const Graph& g, double start = 0.01, double end = 1.0,
                          double step = 0.01);

// CSV with header "epsilon,pearson,spearman,kendall,edge_count".
void write_sweep_table(std::ostream& out, const SweepResult& sweep);
void write_sweep_table_file(const std::string& path, const SweepResult& sweep);

}  // namespace degpen
