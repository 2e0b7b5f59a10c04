#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "degpen/embedding.hpp"
#include "degpen/graph.hpp"
#include "degpen/logistic.hpp"

namespace degpen {

struct TaskReport {
    // Link prediction, positive class = edge.
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
    // Vertex classification: accuracy of each one-vs-rest classifier on the test split.
    std::map<int, double> per_class_accuracy;
    double accuracy = 0.0;  // argmax multi-class accuracy
    std::vector<int> skipped_classes;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
};

// Pairs are unordered, so the default feature |u_i - u_j| ignores orientation.
// Signed keeps u_i - u_j with i < j.
enum class PairFeature { AbsDifference, Difference };

struct LinkPredictionConfig {
    PairFeature feature = PairFeature::AbsDifference;
    double sample_fraction = 0.01;  // positives = round(fraction * |E|), as many negatives
    double train_fraction = 0.7;
    std::uint64_t seed = 0;
    LogisticConfig logistic;
};

// Samples edges and as many uniform non-edges, splits them stratified,
// trains logistic regression on the pair feature and scores the test split.
TaskReport link_prediction_eval(const Embedding& emb, const Graph& g, const LinkPredictionConfig& cfg);

// The (positive, negative) pairs link_prediction_eval uses.
struct PairSample {
    std::vector<std::pair<VertexId, VertexId>> positive;
    std::vector<std::pair<VertexId, VertexId>> negative;
};
PairSample sample_link_pairs(const Graph& g, double sample_fraction, std::uint64_t seed);

struct ClassificationConfig {
    double train_fraction = 0.7;
    std::size_t min_class_size = 5;
    std::uint64_t seed = 0;
    LogisticConfig logistic;
};

// labels: external vertex label -> class id.
TaskReport vertex_classification_eval(const Embedding& emb, const std::map<Label, int>& labels,
                                      const ClassificationConfig& cfg);

// "vertex_label class_id" per line, '#' comments allowed.
std::map<Label, int> read_labels(std::istream& in);
std::map<Label, int> read_labels_file(const std::string& path);

void write_link_report(std::ostream& out, const TaskReport& r);
void write_classification_report(std::ostream& out, const TaskReport& r);

}  // namespace degpen
