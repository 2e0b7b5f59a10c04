#include "degpen/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string_view>

#include <spdlog/spdlog.h>

#include "degpen/error.hpp"

namespace degpen {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                        std::vector<Label> labels) {
    if (labels.empty()) {
        labels.resize(n);
        std::iota(labels.begin(), labels.end(), Label{0});
    }
    if (labels.size() != n) throw Error("label count does not match vertex count");

    std::vector<std::pair<VertexId, VertexId>> directed;
    directed.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw Error("edge endpoint out of range");
        if (u == v) continue;
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    // Compact ids: keep only vertices that have at least one edge.
    std::vector<std::int64_t> remap(n, -1);
    for (const auto& e : directed) remap[e.first] = 0;
    Graph g;
    VertexId next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (remap[v] < 0) continue;
        remap[v] = next++;
        g.labels_.push_back(labels[v]);
    }
    g.dropped_isolated_ = n - next;
    if (next == 0) throw Error("graph is empty after removing self-loops and isolated vertices");

    g.degree_.assign(next, 0);
    g.neighbors_.reserve(directed.size());
    for (const auto& [u, v] : directed) {
        ++g.degree_[remap[u]];
        g.neighbors_.push_back(static_cast<VertexId>(remap[v]));
    }
    g.offsets_.assign(next + 1, 0);
    for (VertexId v = 0; v < next; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degree_[v];

    g.index_.reserve(next);
    for (VertexId v = 0; v < next; ++v) {
        if (!g.index_.emplace(g.labels_[v], v).second) throw Error("duplicate vertex label");
    }
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const noexcept {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::int64_t Graph::find(Label label) const noexcept {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::pair<std::vector<std::uint32_t>, std::size_t> Graph::connected_components() const {
    constexpr auto unseen = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> comp(num_vertices(), unseen);
    std::vector<VertexId> stack;
    std::uint32_t count = 0;
    for (VertexId s = 0; s < num_vertices(); ++s) {
        if (comp[s] != unseen) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : neighbors(v)) {
                if (comp[u] == unseen) {
                    comp[u] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    return {std::move(comp), count};
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_edges());
    for (VertexId u = 0; u < num_vertices(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

bool parse_label(std::string_view tok, Label& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<Label, Label>> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (toks.size() != 2)
            throw ParseError(lineno, "expected two vertex labels, got " + std::to_string(toks.size()) +
                                         " tokens");
        Label a = 0, b = 0;
        if (!parse_label(toks[0], a) || !parse_label(toks[1], b))
            throw ParseError(lineno, "vertex labels must be non-negative integers");
        raw.emplace_back(a, b);
    }
    if (raw.empty()) throw Error("edge list contains no edges");

    // Dense ids follow label order, so the same edge set always gets the same ids.
    std::vector<Label> labels;
    labels.reserve(2 * raw.size());
    for (auto [a, b] : raw) labels.push_back(a), labels.push_back(b);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto id = [&](Label l) {
        return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) edges.emplace_back(id(a), id(b));

    const std::size_t n = labels.size();
    Graph g = Graph::from_edges(n, edges, std::move(labels));
    if (g.dropped_isolated() > 0)
        spdlog::warn("dropped {} isolated vertices while loading edge list", g.dropped_isolated());
    return g;
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge list '" + path + "'");
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (auto [u, v] : g.edge_list()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write edge list '" + path + "'");
    write_edge_list(out, g);
    if (!out) throw Error("failed writing edge list '" + path + "'");
}

}  // namespace degpen
