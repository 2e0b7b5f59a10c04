#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "degpen/graph.hpp"
#include "degpen/sparse_matrix.hpp"

namespace degpen {

// Degree-penalized proximity matrices.
//
//   C   = A^T A - diag(A^T A)       common-neighbour counts, zero diagonal
//   C'  = C + A                     first plus second order proximity
//   W   = D^-beta C' D^-beta        W_ij = C'_ij / (d_i d_j)^beta
//
// C densifies around hubs (a hub of degree d contributes d^2 pairs), so the
// materialized forms are meant for moderate graphs. The walker and the
// spectral operator use proximity_row() or the implicit products instead.

SparseMatrix common_neighbor_matrix(const Graph& g);
SparseMatrix proximity_matrix(const Graph& g);
SparseMatrix penalized_weight_matrix(const Graph& g, double beta);

// Adjacency as a 0/1 matrix.
SparseMatrix adjacency_matrix(const Graph& g);

// One row of C' computed on demand: (j, C'_vj) for every j with C'_vj > 0,
// sorted by j. Costs the size of v's two-hop neighbourhood.
std::vector<std::pair<VertexId, std::uint32_t>> proximity_row(const Graph& g, VertexId v);

// d^-beta for every vertex.
std::vector<double> degree_penalty(const Graph& g, double beta);

}  // namespace degpen
