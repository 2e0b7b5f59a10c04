#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "degpen/graph.hpp"

namespace degpen {

// n x k row-major matrix; row i is the representation of vertex i, and
// labels()[i] its external label.
class Embedding {
public:
    Embedding() = default;
    Embedding(std::size_t n, std::size_t k, std::vector<Label> labels);
    Embedding(std::size_t n, std::size_t k, std::vector<double> values, std::vector<Label> labels);

    std::size_t rows() const noexcept { return n_; }
    std::size_t dim() const noexcept { return k_; }

    std::span<double> row(std::size_t i) noexcept { return {values_.data() + i * k_, k_}; }
    std::span<const double> row(std::size_t i) const noexcept { return {values_.data() + i * k_, k_}; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return values_[i * k_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * k_ + j]; }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }
    std::span<const Label> labels() const noexcept { return labels_; }

    bool all_finite() const noexcept;

    friend bool operator==(const Embedding&, const Embedding&) = default;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<double> values_;
    std::vector<Label> labels_;
};

// Rows reordered so row v belongs to graph vertex v, matched by label.
// Returns a copy even when the order already agrees.
Embedding align_to_graph(const Embedding& emb, const Graph& g);

// Text format: a header line "n k", then one line per row
// "label v1 ... vk" with 17 significant digits so values round-trip exactly.
void write_embedding(std::ostream& out, const Embedding& emb);
void write_embedding_file(const std::string& path, const Embedding& emb);
Embedding read_embedding(std::istream& in);
Embedding read_embedding_file(const std::string& path);

}  // namespace degpen
