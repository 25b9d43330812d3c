#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "sentry/brute.hpp"
#include "sentry/generators.hpp"
#include "sentry/gomory_hu.hpp"
#include "sentry/maxflow.hpp"

using namespace sentry;
using fixtures::from_ids;

TEST_SUITE("gomory_hu") {

TEST_CASE("single edge tree") {
    auto g = fixtures::parse_text("p 2 1\ns 0\ns 1\ne 0 1 7\n");
    auto t = build_gh_tree(g);
    CHECK(t.path_min(0, 1) == 7);
    CHECK(t.global_mincut_capacity() == 7);
}

TEST_CASE("weighted path keeps its own shape") {
    auto g = fixtures::path31();
    auto t = build_gh_tree(g);
    CHECK(t.path_min(0, 1) == 3);
    CHECK(t.path_min(1, 2) == 1);
    CHECK(t.path_min(0, 2) == 1);
    auto [cap_ac, cut_ac] = t.query(0, 2);
    CHECK(cap_ac == 1);
    CHECK(cut_ac.side == from_ids(3, {0, 1}));
    auto [cap_ab, cut_ab] = t.query(0, 1);
    CHECK(cap_ab == 3);
    CHECK(cut_ab.side == from_ids(3, {0}));
}

TEST_CASE("K3: every pair separates at capacity 2") {
    auto g = fixtures::k3_global();
    auto t = build_gh_tree(g);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = u + 1; v < 3; ++v) {
            auto [cap, cut] = t.query(u, v);
            CHECK(cap == 2);
            CHECK(cut.side.contains(u));
            CHECK_FALSE(cut.side.contains(v));
            CHECK(cut_capacity(g, cut.side) == 2);
        }
}

TEST_CASE("query rejects u == v") {
    auto t = build_gh_tree(fixtures::k3_global());
    CHECK_THROWS_AS(t.path_min(1, 1), QueryError);
}

TEST_CASE("tree-path minima equal direct max-flows, subtree sides are real cuts") {
    for (std::uint64_t seed = 3; seed <= 20; ++seed) {
        int n = 4 + static_cast<int>(seed % 6);
        auto g = gen_random_k(n, 0.5, 0, 9, 2, seed * 13);
        auto t = build_gh_tree(g);
        MaxFlow mf(g);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                Capacity direct = mf.solve({u}, {v}).capacity;
                INFO("seed=", seed, " pair=(", u, ",", v, ")");
                REQUIRE(t.path_min(u, v) == direct);
                auto [cap, cut] = t.query(u, v);
                REQUIRE(cap == direct);
                REQUIRE(cut.side.contains(u));
                REQUIRE_FALSE(cut.side.contains(v));
                REQUIRE(cut_capacity(g, cut.side) == direct);
            }
    }
}

TEST_CASE("disconnected graphs link components with zero-capacity edges") {
    auto g = fixtures::parse_text("p 4 2\ns 0\ns 3\ne 0 1 3\ne 2 3 4\n");
    auto t = build_gh_tree(g);
    CHECK(t.path_min(0, 1) == 3);
    CHECK(t.path_min(1, 2) == 0);
    CHECK(t.global_mincut_capacity() == 0);
    // invariant holds verbatim: the witnessing side is a real zero cut
    auto [cap, cut] = t.query(0, 3);
    CHECK(cap == 0);
    CHECK(cut_capacity(g, cut.side) == 0);
}

TEST_CASE("global failure queries on the triangles-plus-bridge graph") {
    auto g = fixtures::triangles_bridge();
    auto t = build_gh_tree(g);

    auto [c1, side1] = global_failure_query(t, g, 2, 3, 1); // fail the bridge fully
    CHECK(c1 == 0);
    CHECK(side1 == std::vector<Vertex>{0, 1, 2});

    auto [c2, side2] = global_failure_query(t, g, 0, 1, 1); // nonvital edge
    CHECK(c2 == 1);
    CHECK(side2 == std::vector<Vertex>{0, 1, 2});

    auto [c3, side3] = global_failure_query(t, g, 4, 5, 0); // delta = 0 never changes
    CHECK(c3 == 1);
    CHECK(side3 == std::vector<Vertex>{0, 1, 2});

    CHECK_THROWS_AS(global_failure_query(t, g, 0, 3, 0), QueryError);  // not an edge
    CHECK_THROWS_AS(global_failure_query(t, g, 0, 1, 2), QueryError);  // delta > w
    auto partial = fixtures::k3_two_steiner();
    auto tp = build_gh_tree(partial);
    CHECK_THROWS_AS(global_failure_query(tp, partial, 0, 1, 0), QueryError); // S != V
}

TEST_CASE("serialization round-trips") {
    auto g = fixtures::triangles_bridge();
    auto t = build_gh_tree(g);
    std::ostringstream out;
    t.write(out);
    std::istringstream in(out.str());
    auto t2 = GomoryHuTree::read(in, g.vertex_count());
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v) CHECK(t.path_min(u, v) == t2.path_min(u, v));
    std::ostringstream out2;
    t2.write(out2);
    CHECK(out.str() == out2.str());
}

} // TEST_SUITE
