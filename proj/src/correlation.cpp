#include "degpen/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "degpen/error.hpp"

namespace degpen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_pair(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error("correlation inputs differ in length");
    if (x.size() < 2) throw Error("correlation needs at least two observations");
}

bool constant(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); });
}

// Number of tied pairs within runs of equal values of a sorted range.
template <typename It, typename Eq>
std::uint64_t tied_pairs(It first, It last, Eq eq) {
    std::uint64_t total = 0;
    while (first != last) {
        It run = first;
        std::uint64_t len = 0;
        while (run != last && eq(*run, *first)) ++run, ++len;
        total += len * (len - 1) / 2;
        first = run;
    }
    return total;
}

// Sorts v in place, returning the number of inversions (swaps).
std::uint64_t merge_count(std::vector<double>& v, std::vector<double>& buf, std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t swaps = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
    std::size_t i = lo, j = mid, o = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            swaps += mid - i;
            buf[o++] = v[j++];
        } else {
            buf[o++] = v[i++];
        }
    }
    while (i < mid) buf[o++] = v[i++];
    while (j < hi) buf[o++] = v[j++];
    std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
    return swaps;
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return kNaN;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return x[a] < x[b]; });
    std::vector<double> ranks(x.size());
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i;
        while (j < idx.size() && x[idx[j]] == x[idx[i]]) ++j;
        double r = 0.5 * static_cast<double>(i + 1 + j);  // mean of positions i+1 .. j
        for (std::size_t p = i; p < j; ++p) ranks[idx[p]] = r;
        i = j;
    }
    return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    return pearson(rx, ry);
}

double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    const std::size_t n = x.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]); });

    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t tx = tied_pairs(idx.begin(), idx.end(), [&](auto a, auto b) { return x[a] == x[b]; });
    const std::uint64_t txy = tied_pairs(idx.begin(), idx.end(),
                                         [&](auto a, auto b) { return x[a] == x[b] && y[a] == y[b]; });

    std::vector<double> ys(n), buf(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
    const std::uint64_t swaps = merge_count(ys, buf, 0, n);
    const std::uint64_t ty = tied_pairs(ys.begin(), ys.end(), [](double a, double b) { return a == b; });

    if (tx == n0 || ty == n0) return kNaN;
    // concordant - discordant
    const double s = static_cast<double>(n0) - static_cast<double>(tx) - static_cast<double>(ty) +
                     static_cast<double>(txy) - 2.0 * static_cast<double>(swaps);
    const double denom = std::sqrt(static_cast<double>(n0 - tx)) * std::sqrt(static_cast<double>(n0 - ty));
    return std::clamp(s / denom, -1.0, 1.0);
}

DegreeCorrelations degree_correlations(std::span<const double> original, std::span<const double> reconstructed) {
    check_pair(original, reconstructed);
    DegreeCorrelations out;
    if (constant(original) || constant(reconstructed)) {
        out.pearson = out.spearman = out.kendall = kNaN;
        return out;
    }
    out.pearson = pearson(original, reconstructed);
    out.spearman = spearman(original, reconstructed);
    out.kendall = kendall_tau_b(original, reconstructed);
    out.defined = true;
    return out;
}

}  // namespace degpen
