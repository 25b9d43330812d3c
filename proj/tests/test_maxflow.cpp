#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sentry/generators.hpp"
#include "sentry/maxflow.hpp"

using namespace sentry;
using fixtures::from_ids;

TEST_SUITE("maxflow") {

TEST_CASE("single edge") {
    auto g = fixtures::parse_text("p 2 1\ns 0\ns 1\ne 0 1 5\n");
    auto r = min_cut(g, std::vector<Vertex>{0}, std::vector<Vertex>{1});
    CHECK(r.capacity == 5);
    CHECK(r.side == from_ids(2, {0}));
}

TEST_CASE("path with minimal source side") {
    auto g = fixtures::path31();
    auto r = min_cut(g, std::vector<Vertex>{0}, std::vector<Vertex>{2});
    CHECK(r.capacity == 1);
    CHECK(r.side == from_ids(3, {0, 1}));
    CHECK(r.minimal);
}

TEST_CASE("multi-terminal sink set on K3") {
    auto g = fixtures::k3_global();
    auto r = min_cut(g, std::vector<Vertex>{0}, std::vector<Vertex>{1, 2});
    CHECK(r.capacity == 2);
    CHECK(r.side == from_ids(3, {0}));
}

TEST_CASE("rejects overlapping or empty terminal sets") {
    auto g = fixtures::k3_global();
    CHECK_THROWS_AS(min_cut(g, std::vector<Vertex>{0}, std::vector<Vertex>{0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_cut(g, std::vector<Vertex>{}, std::vector<Vertex>{0}),
                    std::invalid_argument);
}

TEST_CASE("disconnected terminals yield a zero cut") {
    auto g = fixtures::parse_text("p 4 2\ns 0\ns 3\ne 0 1 3\ne 2 3 4\n");
    auto r = min_cut(g, std::vector<Vertex>{0}, std::vector<Vertex>{3});
    CHECK(r.capacity == 0);
    CHECK(r.side == from_ids(4, {0, 1}));
}

TEST_CASE("matches exhaustive enumeration on random graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 4 + static_cast<int>(seed % 5);
        auto g = gen_random_k(n, 0.6, 0, 9, 2, seed);
        MaxFlow mf(g);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                if (u == v) continue;
                auto r = mf.solve({u}, {v});
                Capacity best = g.total_capacity() + 1;
                for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
                    if (!((mask >> u) & 1) || ((mask >> v) & 1)) continue;
                    VertexSet side(n);
                    for (int x = 0; x < n; ++x)
                        if ((mask >> x) & 1) side.insert(x);
                    best = std::min(best, cut_capacity(g, side));
                }
                REQUIRE(r.capacity == best);
                REQUIRE(cut_capacity(g, r.side) == best); // flow value = recomputed cut value
                REQUIRE(r.side.contains(u));
                REQUIRE_FALSE(r.side.contains(v));
            }
    }
}

TEST_CASE("minimal side is contained in every minimum source side") {
    for (std::uint64_t seed = 20; seed <= 26; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        auto g = gen_random_k(n, 0.7, 1, 6, 2, seed);
        MaxFlow mf(g);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                auto r = mf.solve({u}, {v});
                for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
                    if (!((mask >> u) & 1) || ((mask >> v) & 1)) continue;
                    VertexSet side(n);
                    for (int x = 0; x < n; ++x)
                        if ((mask >> x) & 1) side.insert(x);
                    if (cut_capacity(g, side) != r.capacity) continue;
                    REQUIRE(r.side.is_subset_of(side));
                }
            }
    }
}

TEST_CASE("solver reuse is stateless across calls") {
    auto g = fixtures::triangles_bridge();
    MaxFlow mf(g);
    auto first = mf.solve({0}, {5});
    for (int i = 0; i < 3; ++i) {
        auto again = mf.solve({0}, {5});
        CHECK(again.capacity == first.capacity);
        CHECK(again.side == first.side);
    }
    CHECK(mf.solve({2}, {3}).capacity == 1);
    CHECK(mf.solve({0}, {1}).capacity == 2);
}

} // TEST_SUITE
