#include "degpen/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "degpen/error.hpp"
#include "degpen/rng.hpp"

namespace degpen {

namespace {

double sigmoid(double x) { return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x)); }

double log1pexp(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double margin(const BinaryLogistic& m, std::span<const double> x) {
    double s = m.bias;
    for (std::size_t c = 0; c < x.size(); ++c) s += m.weights[c] * x[c];
    return s;
}

void check_examples(std::span<const LabeledExample> examples) {
    if (examples.empty()) throw Error("logistic regression needs examples");
    const std::size_t dim = examples.front().feature.size();
    for (const auto& e : examples) {
        if (e.feature.size() != dim) throw Error("feature vectors differ in length");
        if (e.label < 0) throw Error("class labels must be non-negative");
        for (double v : e.feature)
            if (!std::isfinite(v)) throw Error("feature values must be finite");
    }
}

}  // namespace

double BinaryLogistic::probability(std::span<const double> x) const {
    if (x.size() != weights.size()) throw Error("feature dimension mismatch");
    return sigmoid(margin(*this, x));
}

double logistic_objective(const BinaryLogistic& model, std::span<const LabeledExample> examples, double l2) {
    double loss = 0.0;
    for (const auto& e : examples) {
        double z = margin(model, e.feature);
        // -[y log s(z) + (1-y) log(1 - s(z))] = log(1 + e^z) - y z
        loss += log1pexp(z) - (e.label ? z : 0.0);
    }
    loss /= static_cast<double>(examples.size());
    double reg = 0.0;
    for (double w : model.weights) reg += w * w;
    return loss + 0.5 * l2 * reg;
}

void logistic_gradient(const BinaryLogistic& model, std::span<const LabeledExample> examples, double l2,
                       std::span<double> grad_w, double& grad_b) {
    std::fill(grad_w.begin(), grad_w.end(), 0.0);
    grad_b = 0.0;
    const double inv = 1.0 / static_cast<double>(examples.size());
    for (const auto& e : examples) {
        double r = (sigmoid(margin(model, e.feature)) - (e.label ? 1.0 : 0.0)) * inv;
        for (std::size_t c = 0; c < grad_w.size(); ++c) grad_w[c] += r * e.feature[c];
        grad_b += r;
    }
    for (std::size_t c = 0; c < grad_w.size(); ++c) grad_w[c] += l2 * model.weights[c];
}

BinaryLogistic train_binary_logistic(std::span<const LabeledExample> examples, const LogisticConfig& cfg,
                                     std::vector<double>* epoch_loss) {
    check_examples(examples);
    if (cfg.epochs < 1 || !(cfg.lr > 0.0) || cfg.l2 < 0.0) throw Error("invalid logistic regression settings");
    const std::size_t dim = examples.front().feature.size();
    BinaryLogistic m;
    m.weights.assign(dim, 0.0);

    std::vector<std::size_t> order(examples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(derive_seed(cfg.seed, {0x106}));
    std::size_t step = 0;
    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
        rng.shuffle(std::span<std::size_t>(order));
        for (std::size_t idx : order) {
            const double lr = cfg.lr / std::sqrt(static_cast<double>(++step));
            const auto& e = examples[idx];
            // Per-example gradient of the objective (the l2 term is shared by all).
            double r = sigmoid(margin(m, e.feature)) - (e.label ? 1.0 : 0.0);
            for (std::size_t c = 0; c < dim; ++c) m.weights[c] -= lr * (r * e.feature[c] + cfg.l2 * m.weights[c]);
            m.bias -= lr * r;
        }
        if (epoch_loss) epoch_loss->push_back(logistic_objective(m, examples, cfg.l2));
    }
    return m;
}

double LogisticModel::probability(std::span<const double> x, int cls) const {
    auto it = std::find(classes.begin(), classes.end(), cls);
    if (it == classes.end()) throw Error("unknown class");
    auto idx = static_cast<std::size_t>(it - classes.begin());
    if (models.size() == 1) {
        double p = models.front().probability(x);
        return idx == 1 ? p : 1.0 - p;
    }
    return models[idx].probability(x);
}

int LogisticModel::predict(std::span<const double> x) const {
    if (models.size() == 1) return models.front().probability(x) >= 0.5 ? classes[1] : classes[0];
    std::size_t best = 0;
    double best_p = -1.0;
    for (std::size_t i = 0; i < models.size(); ++i) {
        double p = models[i].probability(x);
        if (p > best_p) best_p = p, best = i;
    }
    return classes[best];
}

LogisticModel logistic_train(std::span<const LabeledExample> examples, const LogisticConfig& cfg) {
    check_examples(examples);
    LogisticModel out;
    for (const auto& e : examples) out.classes.push_back(e.label);
    std::sort(out.classes.begin(), out.classes.end());
    out.classes.erase(std::unique(out.classes.begin(), out.classes.end()), out.classes.end());
    if (out.classes.size() < 2) throw Error("logistic regression needs at least two classes");

    const std::size_t heads = out.classes.size() == 2 ? 1 : out.classes.size();
    std::vector<LabeledExample> relabeled(examples.begin(), examples.end());
    out.epoch_loss.assign(cfg.epochs, 0.0);
    for (std::size_t h = 0; h < heads; ++h) {
        const int positive = heads == 1 ? out.classes[1] : out.classes[h];
        for (std::size_t i = 0; i < examples.size(); ++i) relabeled[i].label = examples[i].label == positive;
        LogisticConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, {h});
        std::vector<double> losses;
        out.models.push_back(train_binary_logistic(relabeled, sub, &losses));
        for (std::size_t e = 0; e < losses.size(); ++e) out.epoch_loss[e] += losses[e];
    }
    return out;
}

}  // namespace degpen
