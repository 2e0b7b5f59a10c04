#include <doctest.h>

#include <algorithm>
#include <set>

#include "degpen/error.hpp"
#include "degpen/generator.hpp"
#include "degpen/powerlaw.hpp"

using namespace degpen;

TEST_SUITE("generator") {

TEST_CASE("m = 1 gives a tree") {
    auto g = generate_pa({3, 1, 7});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto t = generate_pa({200, 1, seed});
        CHECK(t.num_edges() == 199);
        CHECK(t.connected_components().second == 1);
    }
}

TEST_CASE("invalid configurations") {
    CHECK_THROWS_AS(generate_pa({5, 0, 0}), Error);
    CHECK_THROWS_AS(generate_pa({5, 5, 0}), Error);
    CHECK_THROWS_AS(generate_pa({3, 4, 0}), Error);
}

TEST_CASE("simple, connected, exact edge count") {
    for (std::size_t m : {2u, 5u, 12u}) {
        auto g = generate_pa({500, m, 3});
        CHECK(g.num_vertices() == 500);
        CHECK(g.num_edges() == m * (m + 1) / 2 + m * (500 - m - 1));
        CHECK(g.connected_components().second == 1);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            CHECK(g.degree(v) >= m);
            std::set<VertexId> seen(g.neighbors(v).begin(), g.neighbors(v).end());
            CHECK(seen.size() == g.degree(v));
            CHECK(!seen.contains(v));
        }
    }
}

TEST_CASE("deterministic per seed") {
    auto a = generate_pa({800, 4, 99});
    auto b = generate_pa({800, 4, 99});
    auto c = generate_pa({800, 4, 100});
    CHECK(a.edge_list() == b.edge_list());
    CHECK(a.edge_list() != c.edge_list());
}

TEST_CASE("heavy tail over several seeds") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = generate_pa({5000, 5, seed});
        std::vector<std::uint32_t> d(g.degrees().begin(), g.degrees().end());
        std::nth_element(d.begin(), d.begin() + d.size() / 2, d.end());
        auto median = d[d.size() / 2];
        auto max = *std::max_element(d.begin(), d.end());
        CHECK(max > 10 * median);
    }
}

TEST_CASE("synthetic benchmark size and exponent") {
    auto g = generate_pa({10000, 40, 1});
    CHECK(g.num_vertices() == 10000);
    CHECK(std::abs(double(g.num_edges()) - 399580.0) <= 0.02 * 399580.0);
    std::vector<double> deg(g.degrees().begin(), g.degrees().end());
    auto fit = fit_power_law(deg);
    CHECK(fit.alpha >= 2.0);
    CHECK(fit.alpha <= 3.5);
}

}  // TEST_SUITE
