#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "degpen/embedding.hpp"
#include "degpen/walker.hpp"

namespace degpen {

struct SkipGramConfig {
    std::size_t k = 200;
    std::size_t window = 5;
    std::size_t epochs = 1;
    double lr_start = 0.025;
    double lr_end = 0.0001;
    std::uint64_t seed = 0;
    // Single worker, bit-reproducible. When false, `threads` workers update
    // shared vectors without locks and results depend on scheduling.
    bool deterministic = true;
    std::size_t threads = 1;
};

// Huffman coding tree over the vocabulary. Internal nodes are numbered
// 0..n-2 with the root at n-2; leaf v's path lists the internal nodes from
// the root down and code[d] says which branch was taken at points[d].
class HuffmanTree {
public:
    HuffmanTree() = default;
    // Ties in frequency are broken by vertex id.
    explicit HuffmanTree(std::span<const std::uint64_t> frequency);

    std::size_t num_leaves() const noexcept { return codes_.size(); }
    std::size_t num_inner() const noexcept { return num_leaves() ? num_leaves() - 1 : 0; }
    std::span<const std::uint8_t> code(std::size_t leaf) const noexcept { return codes_[leaf]; }
    std::span<const std::uint32_t> points(std::size_t leaf) const noexcept { return points_[leaf]; }

private:
    std::vector<std::vector<std::uint8_t>> codes_;
    std::vector<std::vector<std::uint32_t>> points_;
};

// Input vectors (the embedding) and internal-node output vectors.
struct SkipGramModel {
    HuffmanTree tree;
    std::size_t k = 0;
    std::vector<double> input;  // n x k
    std::vector<double> inner;  // (n-1) x k

    std::span<const double> input_row(std::size_t v) const { return {input.data() + v * k, k}; }
    std::span<const double> inner_row(std::size_t i) const { return {inner.data() + i * k, k}; }

    // Pr(leaf | h) = prod over the leaf's path of sigma(+-h . inner_node).
    double probability(std::size_t leaf, std::span<const double> h) const;
};

// -log Pr(target | h) under hierarchical softmax.
double hs_loss(const SkipGramModel& model, std::span<const double> h, std::size_t target);

// Gradient of hs_loss w.r.t. h (grad_h, length k) and w.r.t. the inner
// vectors (grad_inner, (n-1) x k, only path rows touched).
void hs_gradient(const SkipGramModel& model, std::span<const double> h, std::size_t target,
                 std::span<double> grad_h, std::span<double> grad_inner);

struct SkipGramResult {
    Embedding embedding;
    SkipGramModel model;
    std::vector<double> epoch_loss;  // mean -log Pr per (center, context) pair
    // Vertices that never occur in the corpus; their rows keep the initial values.
    std::vector<VertexId> untrained;
};

// For every walk position i with center c = walk[i], and every context
// position j in [i - window, i + window], j != i, one SGD step on
// -log Pr(walk[j] | u_c). The learning rate decays linearly from lr_start to
// lr_end over all processed centers.
SkipGramResult train_skipgram(const WalkCorpus& corpus, const SkipGramConfig& cfg);

struct WalkerResult {
    Embedding embedding;
    std::vector<double> epoch_loss;
    std::vector<VertexId> untrained;
};

// generate_walks followed by train_skipgram.
WalkerResult embed_walker(const Graph& g, const WalkConfig& wcfg, const SkipGramConfig& scfg);

}  // namespace degpen
