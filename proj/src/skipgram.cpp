#include "degpen/skipgram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include <spdlog/spdlog.h>

#include "degpen/error.hpp"
#include "degpen/rng.hpp"

namespace degpen {

namespace {

double sigmoid(double x) { return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x)); }

// -log sigma(x)
double neg_log_sigmoid(double x) { return x >= 0 ? std::log1p(std::exp(-x)) : -x + std::log1p(std::exp(x)); }

double dot(const double* a, const double* b, std::size_t k) {
    double s = 0.0;
    for (std::size_t c = 0; c < k; ++c) s += a[c] * b[c];
    return s;
}

}  // namespace

HuffmanTree::HuffmanTree(std::span<const std::uint64_t> frequency) {
    const std::size_t n = frequency.size();
    if (n == 0) throw Error("Huffman tree needs at least one leaf");
    codes_.assign(n, {});
    points_.assign(n, {});
    if (n == 1) return;

    // Leaves sorted by (frequency desc, id asc); the classic two-queue merge
    // then always takes the two smallest remaining nodes.
    std::vector<std::uint32_t> leaves(n);
    std::iota(leaves.begin(), leaves.end(), 0u);
    std::stable_sort(leaves.begin(), leaves.end(),
                     [&](auto a, auto b) { return frequency[a] > frequency[b]; });

    const std::size_t total = 2 * n - 1;
    std::vector<std::uint64_t> count(total, 0);
    std::vector<std::uint32_t> parent(total, 0);
    std::vector<std::uint8_t> branch(total, 0);
    for (std::size_t i = 0; i < n; ++i) count[i] = frequency[leaves[i]];

    std::int64_t pos1 = static_cast<std::int64_t>(n) - 1;
    std::size_t pos2 = n;
    // Merge nodes [0, n) (descending counts, consumed from the back) with the
    // internal nodes [n, next) created so far (ascending counts).
    std::size_t next = n;
    auto take = [&]() -> std::size_t {
        bool leaf_ok = pos1 >= 0;
        bool inner_ok = pos2 < next;
        if (leaf_ok && (!inner_ok || count[pos1] <= count[pos2])) return static_cast<std::size_t>(pos1--);
        return pos2++;
    };
    for (; next < total; ++next) {
        std::size_t a = take();
        std::size_t b = take();
        count[next] = count[a] + count[b];
        parent[a] = parent[b] = static_cast<std::uint32_t>(next);
        branch[b] = 1;
    }

    // Internal node `node` (>= n) becomes inner index node - n; root = n - 2.
    const std::size_t root = total - 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint8_t> code;
        std::vector<std::uint32_t> pts;
        for (std::size_t node = i; node != root; node = parent[node]) {
            code.push_back(branch[node]);
            pts.push_back(static_cast<std::uint32_t>(parent[node] - n));
        }
        std::reverse(code.begin(), code.end());
        std::reverse(pts.begin(), pts.end());
        codes_[leaves[i]] = std::move(code);
        points_[leaves[i]] = std::move(pts);
    }
}

double SkipGramModel::probability(std::size_t leaf, std::span<const double> h) const {
    auto code = tree.code(leaf);
    auto pts = tree.points(leaf);
    double p = 1.0;
    for (std::size_t d = 0; d < code.size(); ++d) {
        double x = dot(h.data(), inner.data() + std::size_t{pts[d]} * k, k);
        p *= sigmoid(code[d] ? -x : x);
    }
    return p;
}

double hs_loss(const SkipGramModel& model, std::span<const double> h, std::size_t target) {
    auto code = model.tree.code(target);
    auto pts = model.tree.points(target);
    double loss = 0.0;
    for (std::size_t d = 0; d < code.size(); ++d) {
        double x = dot(h.data(), model.inner.data() + std::size_t{pts[d]} * model.k, model.k);
        loss += neg_log_sigmoid(code[d] ? -x : x);
    }
    return loss;
}

void hs_gradient(const SkipGramModel& model, std::span<const double> h, std::size_t target,
                 std::span<double> grad_h, std::span<double> grad_inner) {
    const std::size_t k = model.k;
    auto code = model.tree.code(target);
    auto pts = model.tree.points(target);
    std::fill(grad_h.begin(), grad_h.end(), 0.0);
    for (std::size_t d = 0; d < code.size(); ++d) {
        const double* v = model.inner.data() + std::size_t{pts[d]} * k;
        double x = dot(h.data(), v, k);
        // d/dx of -log sigma(s x) with s = +1 for code 0, -1 for code 1.
        double g = sigmoid(x) - (code[d] ? 0.0 : 1.0);
        double* gv = grad_inner.data() + std::size_t{pts[d]} * k;
        for (std::size_t c = 0; c < k; ++c) {
            grad_h[c] += g * v[c];
            gv[c] += g * h[c];
        }
    }
}

namespace {

struct Trainer {
    const WalkCorpus& corpus;
    const SkipGramConfig& cfg;
    SkipGramModel& model;
    std::size_t total_centers;
    std::atomic<std::size_t> processed{0};

    // Returns (loss sum, prediction count) over walks [lo, hi).
    std::pair<double, std::size_t> run(std::size_t lo, std::size_t hi) {
        const std::size_t k = model.k;
        std::vector<double> neu(k);
        double loss = 0.0;
        std::size_t pairs = 0;
        for (std::size_t w = lo; w < hi; ++w) {
            auto walk = corpus.walk(w);
            for (std::size_t i = 0; i < walk.size(); ++i) {
                std::size_t done = processed.fetch_add(1, std::memory_order_relaxed);
                double lr = cfg.lr_start - (cfg.lr_start - cfg.lr_end) * static_cast<double>(done) /
                                               static_cast<double>(total_centers);
                double* h = model.input.data() + std::size_t{walk[i]} * k;
                std::size_t from = i >= cfg.window ? i - cfg.window : 0;
                std::size_t to = std::min(walk.size() - 1, i + cfg.window);
                for (std::size_t j = from; j <= to; ++j) {
                    if (j == i) continue;
                    auto code = model.tree.code(walk[j]);
                    auto pts = model.tree.points(walk[j]);
                    std::fill(neu.begin(), neu.end(), 0.0);
                    for (std::size_t d = 0; d < code.size(); ++d) {
                        double* v = model.inner.data() + std::size_t{pts[d]} * k;
                        double x = dot(h, v, k);
                        loss += neg_log_sigmoid(code[d] ? -x : x);
                        double g = ((code[d] ? 0.0 : 1.0) - sigmoid(x)) * lr;
                        for (std::size_t c = 0; c < k; ++c) neu[c] += g * v[c];
                        for (std::size_t c = 0; c < k; ++c) v[c] += g * h[c];
                    }
                    for (std::size_t c = 0; c < k; ++c) h[c] += neu[c];
                    ++pairs;
                }
            }
        }
        return {loss, pairs};
    }
};

}  // namespace

SkipGramResult train_skipgram(const WalkCorpus& corpus, const SkipGramConfig& cfg) {
    if (corpus.num_tokens() == 0) throw Error("cannot train on an empty corpus");
    if (cfg.k < 1) throw Error("embedding dimension must be at least 1");
    if (cfg.window < 1) throw Error("window must be at least 1");
    if (cfg.epochs < 1) throw Error("epochs must be at least 1");
    if (!(cfg.lr_end > 0.0) || cfg.lr_start < cfg.lr_end) throw Error("need lr_start >= lr_end > 0");

    const std::size_t n = corpus.num_vertices();
    const std::size_t k = cfg.k;
    SkipGramModel model;
    model.tree = HuffmanTree(corpus.frequency());
    model.k = k;
    model.input.resize(n * k);
    model.inner.assign(model.tree.num_inner() * k, 0.0);
    Rng init(derive_seed(cfg.seed, {0x1417}));
    const double half = 0.5 / static_cast<double>(k);
    for (double& x : model.input) x = init.uniform(-half, half);

    SkipGramResult out;
    for (VertexId v = 0; v < n; ++v)
        if (corpus.frequency()[v] == 0) out.untrained.push_back(v);
    if (!out.untrained.empty())
        spdlog::warn("{} vertices never occur in the walk corpus and keep their initial vectors",
                     out.untrained.size());

    Trainer trainer{corpus, cfg, model, cfg.epochs * corpus.num_tokens()};
    const std::size_t walks = corpus.num_walks();
    const std::size_t threads =
        cfg.deterministic ? 1 : std::max<std::size_t>(1, std::min(cfg.threads, walks));
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        double loss = 0.0;
        std::size_t pairs = 0;
        if (threads == 1) {
            std::tie(loss, pairs) = trainer.run(0, walks);
        } else {
            std::vector<std::pair<double, std::size_t>> parts(threads);
            {
                std::vector<std::jthread> pool;
                for (std::size_t t = 0; t < threads; ++t)
                    pool.emplace_back([&, t] { parts[t] = trainer.run(walks * t / threads, walks * (t + 1) / threads); });
            }
            for (auto [l, p] : parts) loss += l, pairs += p;
        }
        out.epoch_loss.push_back(pairs ? loss / static_cast<double>(pairs) : 0.0);
        spdlog::debug("skip-gram epoch {}: mean loss {:.6f}", epoch + 1, out.epoch_loss.back());
    }

    out.embedding = Embedding(n, k, model.input, std::vector<Label>(corpus.labels().begin(), corpus.labels().end()));
    out.model = std::move(model);
    return out;
}

WalkerResult embed_walker(const Graph& g, const WalkConfig& wcfg, const SkipGramConfig& scfg) {
    auto corpus = generate_walks(g, wcfg);
    auto trained = train_skipgram(corpus, scfg);
    return {std::move(trained.embedding), std::move(trained.epoch_loss), std::move(trained.untrained)};
}

}  // namespace degpen
