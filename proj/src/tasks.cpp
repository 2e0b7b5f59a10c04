#include "degpen/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "degpen/error.hpp"
#include "degpen/rng.hpp"

namespace degpen {

namespace {

struct Split {
    std::vector<LabeledExample> train, test;
};

// Per class: shuffle, first train_fraction to train.
Split stratified_split(std::vector<LabeledExample> examples, double train_fraction, Rng& rng) {
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < examples.size(); ++i) by_class[examples[i].label].push_back(i);
    Split s;
    for (auto& [cls, idx] : by_class) {
        rng.shuffle(std::span<std::size_t>(idx));
        auto cut = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(idx.size())));
        cut = std::clamp<std::size_t>(cut, 1, idx.size() > 1 ? idx.size() - 1 : 1);
        for (std::size_t p = 0; p < idx.size(); ++p)
            (p < cut ? s.train : s.test).push_back(std::move(examples[idx[p]]));
    }
    return s;
}

// z-scores every feature column with the training split's statistics.
void standardize(Split& s) {
    if (s.train.empty()) return;
    const std::size_t dim = s.train.front().feature.size();
    std::vector<double> mean(dim, 0.0), sd(dim, 0.0);
    for (const auto& e : s.train)
        for (std::size_t c = 0; c < dim; ++c) mean[c] += e.feature[c];
    for (double& m : mean) m /= static_cast<double>(s.train.size());
    for (const auto& e : s.train)
        for (std::size_t c = 0; c < dim; ++c) sd[c] += (e.feature[c] - mean[c]) * (e.feature[c] - mean[c]);
    for (double& v : sd) {
        v = std::sqrt(v / static_cast<double>(s.train.size()));
        if (!(v > 0.0)) v = 1.0;
    }
    for (auto* part : {&s.train, &s.test})
        for (auto& e : *part)
            for (std::size_t c = 0; c < dim; ++c) e.feature[c] = (e.feature[c] - mean[c]) / sd[c];
}

void check_training_fraction(double f) {
    if (!(f > 0.0 && f < 1.0)) throw Error("train fraction must lie in (0, 1)");
}

}  // namespace

PairSample sample_link_pairs(const Graph& g, double sample_fraction, std::uint64_t seed) {
    if (!(sample_fraction > 0.0 && sample_fraction <= 1.0)) throw Error("sample fraction must lie in (0, 1]");
    const std::size_t n = g.num_vertices();
    const std::uint64_t m = g.num_edges();
    const auto count = static_cast<std::uint64_t>(std::llround(sample_fraction * static_cast<double>(m)));
    const std::uint64_t non_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2 - m;
    if (count < 2 || count > non_edges)
        throw Error(fmt::format("graph too small to sample {} positive and negative pairs "
                                "({} edges, {} non-edges)",
                                count, m, non_edges));

    Rng rng(derive_seed(seed, {0x11c}));
    PairSample out;
    auto edges = g.edge_list();
    for (std::uint64_t i = 0; i < count; ++i) {
        std::size_t j = i + rng.below(edges.size() - i);
        std::swap(edges[i], edges[j]);
        out.positive.push_back(edges[i]);
    }
    std::set<std::pair<VertexId, VertexId>> taken;
    while (out.negative.size() < count) {
        auto a = static_cast<VertexId>(rng.below(n));
        auto b = static_cast<VertexId>(rng.below(n));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (g.has_edge(a, b) || !taken.emplace(a, b).second) continue;
        out.negative.emplace_back(a, b);
    }
    return out;
}

TaskReport link_prediction_eval(const Embedding& emb_in, const Graph& g, const LinkPredictionConfig& cfg) {
    const Embedding emb = align_to_graph(emb_in, g);
    check_training_fraction(cfg.train_fraction);
    auto pairs = sample_link_pairs(g, cfg.sample_fraction, cfg.seed);

    std::vector<LabeledExample> examples;
    auto add = [&](std::pair<VertexId, VertexId> p, int label) {
        LabeledExample e;
        e.label = label;
        auto ui = emb.row(p.first), uj = emb.row(p.second);
        e.feature.resize(emb.dim());
        for (std::size_t c = 0; c < emb.dim(); ++c) e.feature[c] = ui[c] - uj[c];
        if (cfg.feature == PairFeature::AbsDifference)
            for (double& x : e.feature) x = std::abs(x);
        examples.push_back(std::move(e));
    };
    for (auto p : pairs.positive) add(p, 1);
    for (auto p : pairs.negative) add(p, 0);

    Rng rng(derive_seed(cfg.seed, {0x5b1}));
    Split split = stratified_split(std::move(examples), cfg.train_fraction, rng);
    standardize(split);
    LogisticConfig lc = cfg.logistic;
    lc.seed = derive_seed(cfg.seed, {0x7a1});
    auto model = train_binary_logistic(split.train, lc);

    TaskReport r;
    r.train_size = split.train.size();
    r.test_size = split.test.size();
    for (const auto& e : split.test) {
        bool predicted = model.probability(e.feature) >= 0.5;
        bool actual = e.label == 1;
        if (predicted && actual) ++r.tp;
        else if (predicted) ++r.fp;
        else if (actual) ++r.fn;
        else ++r.tn;
    }
    r.precision = r.tp + r.fp ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp) : 0.0;
    r.recall = r.tp + r.fn ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn) : 0.0;
    r.f1 = r.precision + r.recall > 0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
    return r;
}

TaskReport vertex_classification_eval(const Embedding& emb, const std::map<Label, int>& labels,
                                      const ClassificationConfig& cfg) {
    check_training_fraction(cfg.train_fraction);
    std::map<Label, std::size_t> row_of;
    for (std::size_t i = 0; i < emb.rows(); ++i) row_of[emb.labels()[i]] = i;

    std::map<int, std::size_t> class_size;
    for (auto [v, cls] : labels) {
        if (!row_of.count(v)) throw Error(fmt::format("labeled vertex {} is not in the embedding", v));
        if (cls < 0) throw Error("class ids must be non-negative");
        ++class_size[cls];
    }
    TaskReport r;
    std::vector<LabeledExample> examples;
    for (auto [cls, size] : class_size) {
        if (size < cfg.min_class_size) {
            spdlog::warn("class {} has only {} examples; skipped", cls, size);
            r.skipped_classes.push_back(cls);
        }
    }
    for (auto [v, cls] : labels) {
        if (class_size[cls] < cfg.min_class_size) continue;
        auto row = emb.row(row_of[v]);
        examples.push_back({std::vector<double>(row.begin(), row.end()), cls});
    }

    Rng rng(derive_seed(cfg.seed, {0xc1a}));
    Split split = stratified_split(std::move(examples), cfg.train_fraction, rng);
    standardize(split);
    LogisticConfig lc = cfg.logistic;
    lc.seed = derive_seed(cfg.seed, {0x7a2});
    auto model = logistic_train(split.train, lc);

    r.train_size = split.train.size();
    r.test_size = split.test.size();
    std::size_t correct = 0;
    for (const auto& e : split.test) correct += model.predict(e.feature) == e.label;
    r.accuracy = r.test_size ? static_cast<double>(correct) / static_cast<double>(r.test_size) : 0.0;
    for (int cls : model.classes) {
        std::size_t hit = 0;
        for (const auto& e : split.test) hit += (model.probability(e.feature, cls) >= 0.5) == (e.label == cls);
        r.per_class_accuracy[cls] = static_cast<double>(hit) / static_cast<double>(r.test_size);
    }
    return r;
}

std::map<Label, int> read_labels(std::istream& in) {
    std::map<Label, int> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first) || first.front() == '#') continue;
        std::istringstream head(first);
        Label v = 0;
        int cls = 0;
        std::string extra;
        if (!(head >> v) || !head.eof() || first.front() == '-' || !(ss >> cls) || cls < 0 || (ss >> extra))
            throw ParseError(lineno, "expected \"vertex_label class_id\"");
        if (!out.emplace(v, cls).second) throw ParseError(lineno, "vertex labeled twice");
    }
    return out;
}

std::map<Label, int> read_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open labels '" + path + "'");
    return read_labels(in);
}

void write_link_report(std::ostream& out, const TaskReport& r) {
    out << fmt::format("precision {:.6f}\nrecall {:.6f}\nf1 {:.6f}\n", r.precision, r.recall, r.f1);
    out << fmt::format("tp {}\nfp {}\nfn {}\ntn {}\ntrain_size {}\ntest_size {}\n", r.tp, r.fp, r.fn, r.tn,
                       r.train_size, r.test_size);
}

void write_classification_report(std::ostream& out, const TaskReport& r) {
    for (auto [cls, acc] : r.per_class_accuracy) out << fmt::format("class {} accuracy {:.6f}\n", cls, acc);
    out << fmt::format("accuracy {:.6f}\ntrain_size {}\ntest_size {}\n", r.accuracy, r.train_size, r.test_size);
    for (int cls : r.skipped_classes) out << fmt::format("skipped_class {}\n", cls);
}

}  // namespace degpen
