#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace degpen {

// A non-negative count that may be far beyond 64 bits. Small values carry
// the exact integer; all carry log2 and a decimal (mantissa, exponent) form.
struct BigCount {
    double log2 = 0.0;
    std::optional<std::uint64_t> exact;
    double mantissa = 0.0;  // in [1, 10)
    std::int64_t exponent = 0;

    double approx() const;  // may overflow to inf
    std::string str() const;
};

// Bounds on the number of points that fit in an epsilon-ball while staying
// pairwise more than epsilon apart, from packing density bounds in R^k:
//   floor((3/2)^k) <= M_k <= floor(3^k 2^(-0.599 k)),
//   2^-k <= Delta_k <= 2^(-0.599 k).
// The upper bounds are only known to hold for large k (k >= 115).
struct BoundReport {
    std::size_t k = 0;
    BigCount lower;
    BigCount upper;
    double lower_density_log2 = 0.0;
    double upper_density_log2 = 0.0;
    double lower_density = 0.0;  // 2^-k, 0 once it underflows
    double upper_density = 0.0;
    bool upper_valid = false;
};

BoundReport sphere_bounds(std::size_t k);

void write_bounds(std::ostream& out, const BoundReport& report);

}  // namespace degpen
