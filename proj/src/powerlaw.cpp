#include "degpen/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include <fmt/format.h>

#include "degpen/error.hpp"

namespace degpen {

namespace {

constexpr std::size_t kMinTail = 10;

// Sorted distinct values with their multiplicities.
struct Histogram {
    std::vector<double> value;
    std::vector<std::size_t> count;
};

Histogram histogram(std::vector<double> sorted) {
    Histogram h;
    for (double v : sorted) {
        if (h.value.empty() || h.value.back() != v) {
            h.value.push_back(v);
            h.count.push_back(0);
        }
        ++h.count.back();
    }
    return h;
}

// KS over distinct values [first, end) of h; `total` samples in that range.
double ks_on(const Histogram& h, std::size_t first, std::size_t total, double alpha, double d_min) {
    double worst = 0.0;
    std::size_t seen = 0;
    for (std::size_t i = first; i < h.value.size(); ++i) {
        seen += h.count[i];
        double emp = static_cast<double>(seen) / static_cast<double>(total);
        worst = std::max(worst, std::abs(emp - powerlaw_cdf(h.value[i], alpha, d_min)));
    }
    return worst;
}

}  // namespace

double powerlaw_cdf(double d, double alpha, double d_min) {
    if (d < d_min) return 0.0;
    return 1.0 - std::pow((d + 0.5) / (d_min - 0.5), 1.0 - alpha);
}

double ks_distance(std::span<const double> tail, double alpha, double d_min) {
    if (tail.empty()) throw Error("KS distance of an empty tail");
    if (!(alpha > 1.0)) throw Error("power-law exponent must exceed 1");
    if (!(d_min > 0.5)) throw Error("d_min must exceed 1/2");
    std::vector<double> sorted(tail.begin(), tail.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < d_min) throw Error("tail sample below d_min");
    auto h = histogram(std::move(sorted));
    return ks_on(h, 0, tail.size(), alpha, d_min);
}

PowerLawFit fit_power_law(std::span<const double> degrees) {
    std::vector<double> sorted;
    sorted.reserve(degrees.size());
    for (double d : degrees) {
        if (!(d >= 1.0) || d != std::floor(d)) throw Error("power-law fit needs positive integer degrees");
        sorted.push_back(d);
    }
    if (sorted.size() < kMinTail) throw Error("power-law fit needs at least 10 samples");
    std::sort(sorted.begin(), sorted.end());
    const double p90 = sorted[static_cast<std::size_t>(0.9 * static_cast<double>(sorted.size() - 1))];
    auto h = histogram(std::move(sorted));

    // suffix sums over distinct values: tail counts and sum of ln d
    const std::size_t m = h.value.size();
    std::vector<std::size_t> tail_n(m + 1, 0);
    std::vector<double> tail_log(m + 1, 0.0);
    for (std::size_t i = m; i-- > 0;) {
        tail_n[i] = tail_n[i + 1] + h.count[i];
        tail_log[i] = tail_log[i + 1] + static_cast<double>(h.count[i]) * std::log(h.value[i]);
    }

    PowerLawFit best;
    bool found = false;
    for (std::size_t i = 0; i < m && h.value[i] <= p90; ++i) {
        const std::size_t n_tail = tail_n[i];
        if (n_tail < kMinTail || i + 1 >= m) break;
        const double d_min = h.value[i];
        const double denom = tail_log[i] - static_cast<double>(n_tail) * std::log(d_min - 0.5);
        const double alpha = 1.0 + static_cast<double>(n_tail) / denom;
        const double ks = ks_on(h, i, n_tail, alpha, d_min);
        if (!found || ks < best.ks) {
            best = {alpha, d_min, ks, n_tail, (alpha - 1.0) * std::pow(d_min, alpha - 1.0)};
            found = true;
        }
    }
    if (!found) throw Error("no d_min candidate leaves at least 10 varying tail samples; power-law fit undefined");
    return best;
}

void write_fit(std::ostream& out, const PowerLawFit& fit) {
    out << fmt::format("alpha {:.17g}\nd_min {:.17g}\nks {:.17g}\nn_tail {}\n", fit.alpha, fit.d_min, fit.ks,
                       fit.n_tail);
}

}  // namespace degpen
