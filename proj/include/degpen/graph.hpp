#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace degpen {

using VertexId = std::uint32_t;
using Label = std::uint64_t;

// Immutable undirected simple graph in CSR form. Both directions of every
// edge are stored and neighbor lists are sorted. Vertices are dense 0-based
// ids; labels() maps them back to the labels of the input file.
class Graph {
public:
    Graph() = default;

    // Builds from an arbitrary edge list over dense ids [0, n). Self-loops and
    // duplicates are removed and edges symmetrized. Vertices left without any
    // edge are dropped and the remaining ids compacted in increasing order.
    // labels[i] is the external label of input id i (identity when empty).
    static Graph from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                            std::vector<Label> labels = {});

    std::size_t num_vertices() const noexcept { return degree_.size(); }
    std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const noexcept {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(VertexId v) const noexcept { return degree_[v]; }
    std::span<const std::uint32_t> degrees() const noexcept { return degree_; }
    std::span<const std::size_t> offsets() const noexcept { return offsets_; }

    bool has_edge(VertexId u, VertexId v) const noexcept;

    Label label(VertexId v) const noexcept { return labels_[v]; }
    std::span<const Label> labels() const noexcept { return labels_; }
    // Dense id of an external label, or -1 when the label is not in the graph.
    std::int64_t find(Label label) const noexcept;

    // Number of isolated input vertices dropped while building.
    std::size_t dropped_isolated() const noexcept { return dropped_isolated_; }

    // Component id per vertex and the component count.
    std::pair<std::vector<std::uint32_t>, std::size_t> connected_components() const;

    // Each edge once, as (u, v) with u < v, in CSR order.
    std::vector<std::pair<VertexId, VertexId>> edge_list() const;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> neighbors_;
    std::vector<std::uint32_t> degree_;
    std::vector<Label> labels_;
    std::unordered_map<Label, VertexId> index_;
    std::size_t dropped_isolated_ = 0;
};

// Reads the whitespace separated "u v" edge-list format. Lines whose first
// non-blank character is '#' and blank lines are ignored. Dense ids are
// assigned in increasing label order.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Writes "u v" per edge (u < v in dense order) using external labels.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace degpen
