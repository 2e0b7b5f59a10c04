#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace degpen {

// All randomness in the toolkit is derived from a single user seed through
// these helpers, so results only depend on the seed and never on the
// standard library's distribution implementations.

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream seed for a (seed, a, b, ...) tuple.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t p : parts) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) {
        auto mul = static_cast<unsigned __int128>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(mul);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                mul = static_cast<unsigned __int128>(engine_()) * bound;
                low = static_cast<std::uint64_t>(mul);
            }
        }
        return static_cast<std::uint64_t>(mul >> 64);
    }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace degpen
