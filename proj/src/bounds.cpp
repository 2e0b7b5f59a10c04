#include "degpen/bounds.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "degpen/error.hpp"

namespace degpen {

namespace {

constexpr std::size_t kExactLimit = 40;
constexpr double kUpperExponent = 0.599;
constexpr std::size_t kUpperRegime = 115;

BigCount from_log2(double log2v) {
    BigCount c;
    c.log2 = log2v;
    const double log10v = log2v * std::log10(2.0);
    c.exponent = static_cast<std::int64_t>(std::floor(log10v));
    c.mantissa = std::pow(10.0, log10v - static_cast<double>(c.exponent));
    if (c.mantissa >= 10.0) c.mantissa /= 10.0, ++c.exponent;
    return c;
}

BigCount from_exact(std::uint64_t v) {
    BigCount c = from_log2(std::log2(static_cast<double>(v)));
    c.exact = v;
    return c;
}

}  // namespace

double BigCount::approx() const { return exact ? static_cast<double>(*exact) : std::exp2(log2); }

std::string BigCount::str() const {
    if (exact) return std::to_string(*exact);
    return fmt::format("{:.6f}e{}", mantissa, exponent);
}

BoundReport sphere_bounds(std::size_t k) {
    if (k == 0) throw Error("dimension must be at least 1");
    BoundReport r;
    r.k = k;
    const double kd = static_cast<double>(k);
    const double lower_log2 = kd * std::log2(1.5);
    const double upper_log2 = kd * (std::log2(3.0) - kUpperExponent);

    if (k <= kExactLimit) {
        // 3^40 < 2^64, so floor(3^k / 2^k) is exact in integers.
        std::uint64_t pow3 = 1;
        for (std::size_t i = 0; i < k; ++i) pow3 *= 3;
        r.lower = from_exact(pow3 >> k);
        // 3^k 2^(-0.599k) <= 2^40 here; extended precision leaves ~1e-7 of
        // absolute error, far from any integer for these k.
        long double up = std::exp2l(static_cast<long double>(kd) *
                                    (std::log2l(3.0L) - static_cast<long double>(kUpperExponent)));
        r.upper = from_exact(static_cast<std::uint64_t>(std::floor(up)));
    } else {
        r.lower = from_log2(lower_log2);
        r.upper = from_log2(upper_log2);
    }
    r.lower_density_log2 = -kd;
    r.upper_density_log2 = -kUpperExponent * kd;
    r.lower_density = std::exp2(r.lower_density_log2);
    r.upper_density = std::exp2(r.upper_density_log2);
    r.upper_valid = k >= kUpperRegime;
    return r;
}

void write_bounds(std::ostream& out, const BoundReport& r) {
    out << fmt::format("k {}\n", r.k);
    out << fmt::format("lower {}\n", r.lower.str());
    out << fmt::format("upper {}\n", r.upper.str());
    out << fmt::format("lower_log2 {:.17g}\n", r.lower.log2);
    out << fmt::format("upper_log2 {:.17g}\n", r.upper.log2);
    out << fmt::format("lower_density 2^{:.17g}\n", r.lower_density_log2);
    out << fmt::format("upper_density 2^{:.17g}\n", r.upper_density_log2);
    out << fmt::format("upper_valid {}\n", r.upper_valid ? "true" : "false (holds for k >= 115)");
}

}  // namespace degpen
