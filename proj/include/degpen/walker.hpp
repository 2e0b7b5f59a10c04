#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degpen/graph.hpp"
#include "degpen/rng.hpp"

namespace degpen {

enum class WalkMode {
    DegreePenalty,  // Pr(j | i) proportional to C'_ij / (d_i d_j)^beta
    Uniform,        // DeepWalk: uniform over the neighbours of i
};

struct WalkConfig {
    std::size_t walks_per_vertex = 10;
    std::size_t walk_length = 40;  // vertices per walk
    double beta = 1.0;
    std::uint64_t seed = 0;
    WalkMode mode = WalkMode::DegreePenalty;
    std::size_t threads = 1;  // output does not depend on this
};

// Exact next-step law from v, as (j, probability) sorted by j. Enumerates
// v's two-hop neighbourhood; meant for checks and small graphs.
std::vector<std::pair<VertexId, double>> transition_distribution(const Graph& g, double beta, VertexId v,
                                                                 WalkMode mode = WalkMode::DegreePenalty);

// Walker's alias method over a fixed discrete distribution.
class AliasTable {
public:
    AliasTable() = default;
    explicit AliasTable(std::span<const double> weights);

    std::size_t size() const noexcept { return prob_.size(); }
    std::size_t sample(Rng& rng) const;

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

// O(1) sampler for the degree-penalized transition law that never builds
// rows of C'. Writing p_j = d_j^-beta, the unnormalized weight of j from i is
//
//   p_j [j in N(i)] + sum_{x in N(i)} p_j [j in N(x), j != i]
//
// so a step picks the direct-neighbour component (mass sum_{j in N(i)} p_j)
// or the two-hop component through x (mass sum_{j in N(x)} p_j - p_i), then
// draws j from x's neighbours proportionally to p_j, redrawing j == i.
class TransitionSampler {
public:
    TransitionSampler(const Graph& g, double beta, WalkMode mode = WalkMode::DegreePenalty);

    VertexId next(VertexId v, Rng& rng) const;
    const Graph& graph() const noexcept { return *g_; }

private:
    const Graph* g_;
    WalkMode mode_;
    std::vector<AliasTable> neighbor_;  // over N(x), weights p_j
    std::vector<AliasTable> mixture_;   // over {direct, x in N(i)}
};

// Walks stored back to back.
class WalkCorpus {
public:
    WalkCorpus() = default;
    WalkCorpus(std::size_t num_vertices, std::vector<Label> labels);

    void add_walk(std::span<const VertexId> walk);

    std::size_t num_vertices() const noexcept { return frequency_.size(); }
    std::size_t num_walks() const noexcept { return offsets_.size() - 1; }
    std::size_t num_tokens() const noexcept { return tokens_.size(); }
    std::span<const VertexId> walk(std::size_t i) const noexcept {
        return {tokens_.data() + offsets_[i], tokens_.data() + offsets_[i + 1]};
    }
    std::span<const std::uint64_t> frequency() const noexcept { return frequency_; }
    std::span<const Label> labels() const noexcept { return labels_; }

    friend bool operator==(const WalkCorpus&, const WalkCorpus&) = default;

private:
    std::vector<VertexId> tokens_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint64_t> frequency_;
    std::vector<Label> labels_;
};

// walks_per_vertex passes; each pass visits every start vertex once in a
// seeded shuffled order. Walk (pass, start) draws from its own stream
// derive_seed(seed, {pass, start}).
WalkCorpus generate_walks(const Graph& g, const WalkConfig& cfg);

// One walk per line, space separated external labels.
void write_corpus(std::ostream& out, const WalkCorpus& corpus);
void write_corpus_file(const std::string& path, const WalkCorpus& corpus);

}  // namespace degpen
