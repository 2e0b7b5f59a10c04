#pragma once

#include <cstddef>
#include <cstdint>

#include "degpen/graph.hpp"

namespace degpen {

struct PaConfig {
    std::size_t n = 0;  // vertex count
    std::size_t m = 1;  // edges per arriving vertex
    std::uint64_t seed = 0;
};

// Barabasi-Albert preferential attachment. Starts from a complete graph on
// m + 1 vertices; every later vertex attaches to m distinct existing vertices
// picked with probability proportional to their current degree. The result
// has exactly m(m+1)/2 + m(n-m-1) edges and labels 0..n-1 in arrival order.
Graph generate_pa(const PaConfig& cfg);

}  // namespace degpen
