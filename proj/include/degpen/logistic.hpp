#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace degpen {

struct LabeledExample {
    std::vector<double> feature;
    int label = 0;
};

struct LogisticConfig {
    double l2 = 1e-4;
    std::size_t epochs = 50;
    double lr = 0.1;  // the t-th update (counted over all epochs) uses lr / sqrt(t)
    std::uint64_t seed = 0;
};

// Binary logistic regression: Pr(y = 1 | x) = sigma(w . x + b).
struct BinaryLogistic {
    std::vector<double> weights;
    double bias = 0.0;

    double probability(std::span<const double> x) const;
};

// Mean log-loss over the examples plus (l2 / 2) ||w||^2; the bias is not
// penalized. Labels must be 0 or 1.
double logistic_objective(const BinaryLogistic& model, std::span<const LabeledExample> examples, double l2);

// Gradient of logistic_objective: grad_w (size of w) and grad_b.
void logistic_gradient(const BinaryLogistic& model, std::span<const LabeledExample> examples, double l2,
                       std::span<double> grad_w, double& grad_b);

// Seeded SGD on logistic_objective for 0/1 labels. epoch_loss receives the
// objective after every epoch when non-null.
BinaryLogistic train_binary_logistic(std::span<const LabeledExample> examples, const LogisticConfig& cfg,
                                     std::vector<double>* epoch_loss = nullptr);

// Classifier over arbitrary class ids. With two classes a single model
// scores classes[1]; with more, one one-vs-rest model per class.
struct LogisticModel {
    std::vector<int> classes;
    std::vector<BinaryLogistic> models;
    std::vector<double> epoch_loss;  // summed across the binary models

    // Pr(class) for a class in `classes`; one-vs-rest scores are not renormalized.
    double probability(std::span<const double> x, int cls) const;
    int predict(std::span<const double> x) const;
};

LogisticModel logistic_train(std::span<const LabeledExample> examples, const LogisticConfig& cfg);

}  // namespace degpen
