#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>

namespace degpen {

// Discrete power law p(d) = C d^-alpha for d >= d_min, handled through the
// continuous approximation with a half-unit offset:
//   Pr(D >= d) = ((d - 1/2) / (d_min - 1/2))^(1 - alpha).
struct PowerLawFit {
    double alpha = 0.0;
    double d_min = 0.0;
    double ks = 0.0;
    std::size_t n_tail = 0;
    double norm_const = 0.0;  // (alpha - 1) d_min^(alpha - 1)
};

// Fitted Pr(D <= d) for integer d >= d_min.
double powerlaw_cdf(double d, double alpha, double d_min);

// sup over the tail's distinct values v of |F_empirical(v) - powerlaw_cdf(v)|.
// Every sample must be >= d_min.
double ks_distance(std::span<const double> tail, double alpha, double d_min);

// alpha_hat = 1 + n_tail / sum ln(d_i / (d_min - 1/2)) for each candidate
// d_min (distinct values up to the 90th percentile keeping >= 10 tail
// samples with some variation); returns the candidate with the smallest KS
// distance, smallest d_min on ties.
PowerLawFit fit_power_law(std::span<const double> degrees);

// "alpha <a>\nd_min <d>\nks <k>\nn_tail <n>\n"
void write_fit(std::ostream& out, const PowerLawFit& fit);

}  // namespace degpen
