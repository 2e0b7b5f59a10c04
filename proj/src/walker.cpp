#include "degpen/walker.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <thread>

#include "degpen/error.hpp"
#include "degpen/proximity.hpp"

namespace degpen {

std::vector<std::pair<VertexId, double>> transition_distribution(const Graph& g, double beta, VertexId v,
                                                                 WalkMode mode) {
    if (v >= g.num_vertices()) throw Error("vertex id out of range");
    std::vector<std::pair<VertexId, double>> out;
    if (mode == WalkMode::Uniform) {
        const double p = 1.0 / g.degree(v);
        for (VertexId j : g.neighbors(v)) out.emplace_back(j, p);
        return out;
    }
    const double dv = g.degree(v);
    double total = 0.0;
    for (auto [j, cp] : proximity_row(g, v)) {
        double w = cp / std::pow(dv * g.degree(j), beta);
        out.emplace_back(j, w);
        total += w;
    }
    for (auto& [j, p] : out) p /= total;
    return out;
}

AliasTable::AliasTable(std::span<const double> weights) {
    const std::size_t n = weights.size();
    if (n == 0) throw Error("alias table needs at least one outcome");
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) throw Error("alias table weights must have positive sum");
    prob_.resize(n);
    alias_.resize(n);
    std::vector<double> scaled(n);
    std::vector<std::uint32_t> small, large;
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = weights[i] * static_cast<double>(n) / total;
        (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
        auto s = small.back();
        small.pop_back();
        auto l = large.back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    for (auto i : large) prob_[i] = 1.0, alias_[i] = i;
    for (auto i : small) prob_[i] = 1.0, alias_[i] = i;
}

std::size_t AliasTable::sample(Rng& rng) const {
    std::size_t i = rng.below(prob_.size());
    return rng.uniform() < prob_[i] ? i : alias_[i];
}

TransitionSampler::TransitionSampler(const Graph& g, double beta, WalkMode mode) : g_(&g), mode_(mode) {
    if (mode_ == WalkMode::Uniform) return;
    if (!std::isfinite(beta)) throw Error("beta must be finite");
    const std::size_t n = g.num_vertices();
    auto pen = degree_penalty(g, beta);
    std::vector<double> mass(n, 0.0);
    neighbor_.resize(n);
    std::vector<double> w;
    for (VertexId x = 0; x < n; ++x) {
        w.clear();
        for (VertexId j : g.neighbors(x)) w.push_back(pen[j]);
        mass[x] = std::accumulate(w.begin(), w.end(), 0.0);
        neighbor_[x] = AliasTable(w);
    }
    mixture_.resize(n);
    for (VertexId i = 0; i < n; ++i) {
        w.clear();
        w.push_back(mass[i]);
        for (VertexId x : g.neighbors(i))
            w.push_back(g.degree(x) == 1 ? 0.0 : std::max(0.0, mass[x] - pen[i]));
        mixture_[i] = AliasTable(w);
    }
}

VertexId TransitionSampler::next(VertexId v, Rng& rng) const {
    auto nb = g_->neighbors(v);
    if (mode_ == WalkMode::Uniform) return nb[rng.below(nb.size())];
    std::size_t c = mixture_[v].sample(rng);
    if (c == 0) return nb[neighbor_[v].sample(rng)];
    VertexId x = nb[c - 1];
    auto xnb = g_->neighbors(x);
    while (true) {
        VertexId j = xnb[neighbor_[x].sample(rng)];
        if (j != v) return j;
    }
}

WalkCorpus::WalkCorpus(std::size_t num_vertices, std::vector<Label> labels)
    : frequency_(num_vertices, 0), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.resize(num_vertices);
        std::iota(labels_.begin(), labels_.end(), Label{0});
    }
    if (labels_.size() != num_vertices) throw Error("corpus label count does not match vertex count");
}

void WalkCorpus::add_walk(std::span<const VertexId> walk) {
    if (walk.empty()) throw Error("walks must contain at least one vertex");
    for (VertexId v : walk) {
        if (v >= frequency_.size()) throw Error("walk vertex id out of range");
        ++frequency_[v];
    }
    tokens_.insert(tokens_.end(), walk.begin(), walk.end());
    offsets_.push_back(tokens_.size());
}

WalkCorpus generate_walks(const Graph& g, const WalkConfig& cfg) {
    if (cfg.walks_per_vertex < 1) throw Error("walks per vertex must be at least 1");
    if (cfg.walk_length < 2) throw Error("walk length must be at least 2");
    const std::size_t n = g.num_vertices();
    const std::size_t len = cfg.walk_length;
    TransitionSampler sampler(g, cfg.beta, cfg.mode);

    // Each pass fills a preallocated block so the layout is independent of
    // how starts are split across workers.
    std::vector<VertexId> block(n * len);
    WalkCorpus corpus(n, std::vector<Label>(g.labels().begin(), g.labels().end()));
    std::vector<VertexId> order(n);
    const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, n));

    for (std::size_t pass = 0; pass < cfg.walks_per_vertex; ++pass) {
        std::iota(order.begin(), order.end(), VertexId{0});
        Rng shuffler(derive_seed(cfg.seed, {0x5f, pass}));
        shuffler.shuffle(std::span<VertexId>(order));

        auto work = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t slot = lo; slot < hi; ++slot) {
                VertexId v = order[slot];
                Rng rng(derive_seed(cfg.seed, {pass, v}));
                VertexId* out = block.data() + slot * len;
                out[0] = v;
                for (std::size_t s = 1; s < len; ++s) out[s] = sampler.next(out[s - 1], rng);
            }
        };
        if (threads == 1) {
            work(0, n);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, n * t / threads, n * (t + 1) / threads);
        }
        for (std::size_t slot = 0; slot < n; ++slot)
            corpus.add_walk(std::span<const VertexId>(block.data() + slot * len, len));
    }
    return corpus;
}

void write_corpus(std::ostream& out, const WalkCorpus& corpus) {
    for (std::size_t w = 0; w < corpus.num_walks(); ++w) {
        bool first = true;
        for (VertexId v : corpus.walk(w)) {
            if (!first) out << ' ';
            out << corpus.labels()[v];
            first = false;
        }
        out << '\n';
    }
}

void write_corpus_file(const std::string& path, const WalkCorpus& corpus) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write corpus '" + path + "'");
    write_corpus(out, corpus);
}

}  // namespace degpen
