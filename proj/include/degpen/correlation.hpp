#pragma once

#include <span>
#include <vector>

namespace degpen {

// Each returns NaN when either side has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);
// Pearson on average ranks (ties share the mean of their positions, 1-based).
double spearman(std::span<const double> x, std::span<const double> y);
// Tie-corrected tau-b, O(n log n) (Knight's merge-sort algorithm).
double kendall_tau_b(std::span<const double> x, std::span<const double> y);

std::vector<double> average_ranks(std::span<const double> x);

struct DegreeCorrelations {
    double pearson = 0.0;
    double spearman = 0.0;
    double kendall = 0.0;
    // False when a side has zero variance; the statistics are then NaN.
    bool defined = false;
};

DegreeCorrelations degree_correlations(std::span<const double> original, std::span<const double> reconstructed);

}  // namespace degpen
