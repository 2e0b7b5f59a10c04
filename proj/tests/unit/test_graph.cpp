#include <doctest.h>

#include <sstream>

#include "degpen/error.hpp"
#include "degpen/graph.hpp"
#include "degpen/proximity.hpp"
#include "oracles.hpp"

using namespace degpen;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

void check_invariants(const Graph& g) {
    std::size_t total = 0;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        auto nb = g.neighbors(u);
        CHECK(g.degree(u) == nb.size());
        CHECK(g.degree(u) >= 1);
        total += nb.size();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            CHECK(nb[i] != u);
            if (i) CHECK(nb[i - 1] < nb[i]);
            CHECK(g.has_edge(nb[i], u));
        }
    }
    CHECK(total == 2 * g.num_edges());
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("triangle from text") {
    auto g = parse("0 1\n1 2\n2 0\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    for (VertexId v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    check_invariants(g);
}

TEST_CASE("duplicates, reversed edges, self-loops and isolated vertices are cleaned") {
    auto g = parse("0 1\n0 1\n1 0\n3 3\n");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.find(3) == -1);
    CHECK(g.find(0) >= 0);
    CHECK(g.find(1) >= 0);
    CHECK(g.dropped_isolated() == 1);
    check_invariants(g);
}

TEST_CASE("comments, blank lines and arbitrary labels") {
    auto g = parse("# header\n\n  100 7 \n7\t42\n# 1 2\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    auto hub = g.find(7);
    REQUIRE(hub >= 0);
    CHECK(g.degree(static_cast<VertexId>(hub)) == 2);
    CHECK(g.label(static_cast<VertexId>(hub)) == 7);
}

TEST_CASE("malformed lines report their line number") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0 1\n1 x\n") == 2);
    CHECK(line_of("# c\n0 1\n\n1 2 3\n") == 4);
    CHECK(line_of("0 -1\n") == 1);
    CHECK(line_of("1\n") == 1);
    CHECK(line_of("0 1.5\n") == 1);
}

TEST_CASE("empty graphs are rejected") {
    CHECK_THROWS_AS(parse(""), Error);
    CHECK_THROWS_AS(parse("# only comments\n"), Error);
    CHECK_THROWS_AS(parse("4 4\n5 5\n"), Error);
}

TEST_CASE("edge list round trip is idempotent") {
    auto g = oracle::random_graph(40, 0.1, 3);
    std::ostringstream first;
    write_edge_list(first, g);
    auto h = parse(first.str());
    std::ostringstream second;
    write_edge_list(second, h);
    auto k = parse(second.str());
    std::ostringstream third;
    write_edge_list(third, k);
    CHECK(second.str() == third.str());
    CHECK(h.num_edges() == g.num_edges());
    for (auto [u, v] : g.edge_list()) {
        auto a = h.find(g.label(u)), b = h.find(g.label(v));
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        CHECK(h.has_edge(static_cast<VertexId>(a), static_cast<VertexId>(b)));
    }
}

TEST_CASE("connected components") {
    auto g = parse("0 1\n1 2\n5 6\n");
    auto [comp, count] = g.connected_components();
    CHECK(count == 2);
    CHECK(comp[g.find(0)] == comp[g.find(2)]);
    CHECK(comp[g.find(0)] != comp[g.find(5)]);
}

}  // TEST_SUITE

TEST_SUITE("proximity") {

TEST_CASE("path 1-2-3") {
    auto g = Graph::from_edges(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
    auto c = common_neighbor_matrix(g);
    CHECK(c.at(0, 2) == 1.0);
    CHECK(c.at(0, 1) == 0.0);
    CHECK(c.at(1, 2) == 0.0);
    for (int i = 0; i < 3; ++i) CHECK(c.at(i, i) == 0.0);
    auto cp = proximity_matrix(g);
    CHECK(cp.at(0, 1) == 1.0);
    CHECK(cp.at(0, 2) == 1.0);
    CHECK(cp.at(1, 2) == 1.0);
}

TEST_CASE("triangle") {
    auto g = Graph::from_edges(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}, {0, 2}});
    auto c = common_neighbor_matrix(g);
    auto cp = proximity_matrix(g);
    auto w = penalized_weight_matrix(g, 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            CHECK(c.at(i, j) == 1.0);
            CHECK(cp.at(i, j) == 2.0);
            CHECK(w.at(i, j) == doctest::Approx(0.5).epsilon(1e-15));
        }
}

TEST_CASE("star") {
    auto g = oracle::star(3);
    auto c = common_neighbor_matrix(g);
    CHECK(c.at(1, 2) == 1.0);
    CHECK(c.at(2, 3) == 1.0);
    CHECK(c.at(0, 1) == 0.0);
    auto w = penalized_weight_matrix(g, 1.0);
    CHECK(w.at(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(w.at(1, 3) == 1.0);
}

TEST_CASE("single edge") {
    auto g = Graph::from_edges(2, std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
    CHECK(proximity_matrix(g).at(0, 1) == 1.0);
    CHECK(common_neighbor_matrix(g).nnz() == 0);
}

TEST_CASE("common neighbours match the triple-loop oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 10 + 2 * seed;
        auto g = oracle::random_graph(n, 0.05 + 0.02 * static_cast<double>(seed % 7), seed);
        auto c = common_neighbor_matrix(g);
        auto cp = proximity_matrix(g);
        auto ref = oracle::common_neighbors(g);
        auto a = oracle::adjacency(g);
        bool same = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                same = same && c.at(i, j) == ref[i][j];
                same = same && cp.at(i, j) == ref[i][j] + a[i][j];
            }
        CHECK_MESSAGE(same, "seed " << seed);
        CHECK(c.asymmetry() == 0.0);
    }
}

TEST_CASE("penalized weights match the dense formula and stay symmetric") {
    for (double beta : {0.0, 0.5, 1.0, 2.0}) {
        auto g = oracle::random_graph(30, 0.15, 11);
        auto w = penalized_weight_matrix(g, beta);
        auto ref = oracle::penalized_weights(g, beta);
        double worst = 0.0;
        for (std::size_t i = 0; i < 30; ++i)
            for (std::size_t j = 0; j < 30; ++j)
                worst = std::max(worst, std::abs(w.at(i, j) - ref[i][j]) / std::max(1e-300, std::abs(ref[i][j])));
        CHECK(worst <= 1e-12);
        CHECK(w.asymmetry() <= 1e-12);
        CHECK(w.nnz() == proximity_matrix(g).nnz());
    }
}

TEST_CASE("beta = 0 returns C' exactly") {
    auto g = oracle::random_graph(25, 0.2, 5);
    auto w = penalized_weight_matrix(g, 0.0);
    auto cp = proximity_matrix(g);
    REQUIRE(w.nnz() == cp.nnz());
    for (std::size_t i = 0; i < 25; ++i)
        for (std::size_t j = 0; j < 25; ++j) CHECK(w.at(i, j) == cp.at(i, j));
}

TEST_CASE("penalty is monotone in beta") {
    auto g = oracle::random_graph(20, 0.2, 9);
    auto lo = penalized_weight_matrix(g, 0.5), hi = penalized_weight_matrix(g, 1.5);
    auto cp = proximity_matrix(g);
    for (VertexId i = 0; i < 20; ++i)
        for (auto j : cp.row_cols(i)) {
            double dd = double(g.degree(i)) * g.degree(j);
            if (dd > 1) CHECK(hi.at(i, j) < lo.at(i, j));
            else CHECK(hi.at(i, j) == lo.at(i, j));
        }
}

TEST_CASE("proximity rows on demand agree with the materialized matrix") {
    auto g = oracle::random_graph(60, 0.08, 21);
    auto cp = proximity_matrix(g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        auto row = proximity_row(g, v);
        auto cols = cp.row_cols(v);
        auto vals = cp.row_values(v);
        REQUIRE(row.size() == cols.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            CHECK(row[i].first == cols[i]);
            CHECK(double(row[i].second) == vals[i]);
        }
    }
}

}  // TEST_SUITE
