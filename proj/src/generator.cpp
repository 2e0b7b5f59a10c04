#include "degpen/generator.hpp"

#include <algorithm>
#include <vector>

#include "degpen/error.hpp"
#include "degpen/rng.hpp"

namespace degpen {

Graph generate_pa(const PaConfig& cfg) {
    if (cfg.m < 1 || cfg.n <= cfg.m) throw Error("preferential attachment needs n > m >= 1");
    const std::size_t n = cfg.n, m = cfg.m;

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(m * (m + 1) / 2 + m * (n - m - 1));
    // Every edge contributes both endpoints, so a uniform draw from this list
    // picks a vertex with probability proportional to its degree.
    std::vector<VertexId> endpoints;
    endpoints.reserve(2 * edges.capacity());
    for (VertexId u = 0; u <= m; ++u) {
        for (VertexId v = u + 1; v <= m; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }

    Rng rng(derive_seed(cfg.seed, {0x70a}));
    std::vector<VertexId> targets;
    targets.reserve(m);
    for (std::size_t v = m + 1; v < n; ++v) {
        targets.clear();
        // The pool is fixed for the whole arrival; repeats are redrawn.
        const std::size_t pool = endpoints.size();
        while (targets.size() < m) {
            VertexId t = endpoints[rng.below(pool)];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (VertexId t : targets) {
            edges.emplace_back(t, static_cast<VertexId>(v));
            endpoints.push_back(t);
            endpoints.push_back(static_cast<VertexId>(v));
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace degpen
