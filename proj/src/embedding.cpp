#include "degpen/embedding.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "degpen/error.hpp"

namespace degpen {

Embedding::Embedding(std::size_t n, std::size_t k, std::vector<Label> labels)
    : Embedding(n, k, std::vector<double>(n * k, 0.0), std::move(labels)) {}

Embedding::Embedding(std::size_t n, std::size_t k, std::vector<double> values,
                     std::vector<Label> labels)
    : n_(n), k_(k), values_(std::move(values)), labels_(std::move(labels)) {
    if (values_.size() != n * k) throw Error("embedding value count does not match n x k");
    if (labels_.empty()) {
        labels_.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels_[i] = i;
    }
    if (labels_.size() != n) throw Error("embedding label count does not match n");
}

bool Embedding::all_finite() const noexcept {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

void write_embedding(std::ostream& out, const Embedding& emb) {
    std::string line;
    out << emb.rows() << ' ' << emb.dim() << '\n';
    for (std::size_t i = 0; i < emb.rows(); ++i) {
        line.clear();
        fmt::format_to(std::back_inserter(line), "{}", emb.labels()[i]);
        for (double v : emb.row(i)) fmt::format_to(std::back_inserter(line), " {:.17g}", v);
        line.push_back('\n');
        out << line;
    }
}

void write_embedding_file(const std::string& path, const Embedding& emb) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write embedding '" + path + "'");
    write_embedding(out, emb);
    if (!out) throw Error("failed writing embedding '" + path + "'");
}

Embedding read_embedding(std::istream& in) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line)) throw ParseError(lineno, "missing embedding header");
    std::istringstream header(line);
    std::size_t n = 0, k = 0;
    if (!(header >> n >> k) || k == 0) throw ParseError(lineno, "header must be \"n k\"");

    std::vector<double> values;
    values.reserve(n * k);
    std::vector<Label> labels;
    labels.reserve(n);
    while (labels.size() < n && std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        Label label = 0;
        if (!(row >> label)) throw ParseError(lineno, "missing vertex label");
        for (std::size_t j = 0; j < k; ++j) {
            std::string tok;
            double v = 0.0;
            if (!(row >> tok)) throw ParseError(lineno, "expected " + std::to_string(k) + " values");
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError(lineno, "invalid number '" + tok + "'");
            if (!std::isfinite(v)) throw ParseError(lineno, "non-finite value '" + tok + "'");
            values.push_back(v);
        }
        std::string extra;
        if (row >> extra) throw ParseError(lineno, "too many values");
        labels.push_back(label);
    }
    if (labels.size() != n) throw ParseError(lineno, "expected " + std::to_string(n) + " rows");
    return Embedding(n, k, std::move(values), std::move(labels));
}

Embedding read_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open embedding '" + path + "'");
    return read_embedding(in);
}

Embedding align_to_graph(const Embedding& emb, const Graph& g) {
    if (emb.rows() != g.num_vertices())
        throw Error(fmt::format("embedding has {} rows but the graph has {} vertices", emb.rows(), g.num_vertices()));
    std::vector<std::int64_t> row_of(g.num_vertices(), -1);
    for (std::size_t i = 0; i < emb.rows(); ++i) {
        auto v = g.find(emb.labels()[i]);
        if (v < 0) throw Error(fmt::format("embedding label {} is not a graph vertex", emb.labels()[i]));
        if (row_of[v] >= 0) throw Error(fmt::format("embedding label {} appears twice", emb.labels()[i]));
        row_of[v] = static_cast<std::int64_t>(i);
    }
    Embedding out(emb.rows(), emb.dim(), std::vector<Label>(g.labels().begin(), g.labels().end()));
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto src = emb.row(static_cast<std::size_t>(row_of[v]));
        std::copy(src.begin(), src.end(), out.row(v).begin());
    }
    return out;
}

}  // namespace degpen
