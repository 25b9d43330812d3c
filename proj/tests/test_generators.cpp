#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "sentry/brute.hpp"
#include "sentry/generators.hpp"
#include "sentry/oracle.hpp"
#include "sentry/steiner.hpp"

using namespace sentry;

TEST_SUITE("generators") {

TEST_CASE("G(M) worked example: n=4, M=[[1,2],[3,4]]") {
    MatrixInstance mi;
    mi.m = {{1, 2}, {3, 4}};
    auto g = gen_capacity_lb(mi, 2);
    CHECK(g.vertex_count() == 4);
    auto brute = brute_steiner_mincut(g);
    CHECK(brute.lambda == 10);
    // failing (a1, b2) = (0, 3) drops the capacity to 8
    CHECK(brute.cap_after(g, *g.find_edge(0, 3), 2) == 8);
}

TEST_CASE("G(M) degenerate n=2 instance") {
    MatrixInstance mi;
    mi.m = {{7}};
    auto g = gen_capacity_lb(mi, 2);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(brute_steiner_mincut(g).lambda == 7);
}

TEST_CASE("G(M): cap queries reproduce lambda - M[i][j] for every cross edge") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);
        auto mi = random_matrix(n, static_cast<Capacity>(n) * n, seed);
        int smax = 2 + static_cast<int>(seed % (n - 1));
        auto g = gen_capacity_lb(mi, smax);
        auto o = build_full_oracle(g);
        Capacity lambda = o.lambda;
        Capacity sum = 0;
        for (const auto& row : mi.m)
            for (Capacity x : row) sum += x;
        REQUIRE(lambda == sum);
        for (int i = 0; i < mi.rows(); ++i)
            for (int j = 0; j < mi.cols(); ++j) {
                Vertex a = i, b = mi.rows() + j;
                auto ans = cap_query(o, a, b, mi.m[i][j]);
                INFO("seed=", seed, " i=", i, " j=", j);
                REQUIRE(ans.capacity == lambda - mi.m[i][j]);
            }
    }
}

TEST_CASE("matrix validation") {
    MatrixInstance bad;
    bad.m = {{1, 2}, {3}};
    CHECK_THROWS_AS(gen_capacity_lb(bad, 2), std::invalid_argument);
    MatrixInstance zero;
    zero.m = {{0}};
    CHECK_THROWS_AS(gen_capacity_lb(zero, 2), std::invalid_argument);
    MatrixInstance wrong_shape;
    wrong_shape.m = {{1, 2, 3}};
    CHECK_THROWS_AS(gen_capacity_lb(wrong_shape, 2), std::invalid_argument);
}

TEST_CASE("G(B): changed flags reconstruct the bipartite graph") {
    std::vector<std::vector<int>> b = {{1, 0, 1}, {0, 0, 1}};
    auto g = gen_bipartite_lb(b, 1, 1);
    auto o = build_full_oracle(g);
    int rows = 2;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < 3; ++j) {
            Vertex u = i, v = rows + j;
            auto id = g.find_edge(u, v);
            REQUIRE(id.has_value());
            Capacity w = g.edge(*id).w;
            auto ans = cap_query(o, u, v, w);
            CHECK(ans.changed == (b[i][j] == 1));
        }
}

TEST_CASE("G(B) with an empty bipartite graph has lambda 0") {
    std::vector<std::vector<int>> b = {{0, 0}, {0, 0}};
    auto g = gen_bipartite_lb(b, 2, 2);
    CHECK(brute_steiner_mincut(g).lambda == 0);
    // all cross edges exist with zero capacity; only delta = 0 is legal
    auto o = build_full_oracle(g);
    auto ans = cap_query(o, 0, 2, 0);
    CHECK(ans.capacity == 0);
    CHECK_FALSE(ans.changed);
    CHECK_THROWS_AS(cap_query(o, 0, 2, 1), QueryError);
}

TEST_CASE("G(B) with a complete bipartite graph counts all cross edges") {
    int n = 7;
    std::vector<std::vector<int>> b(n / 2, std::vector<int>((n + 1) / 2, 1));
    auto g = gen_bipartite_lb(b, 1, 1);
    CHECK(brute_steiner_mincut(g).lambda == (n / 2) * ((n + 1) / 2));
}

TEST_CASE("G_s(H) doubles odd instances and isolates the attached mincut") {
    // spec example: path a-b-c (3,1) has lambda 1, alpha 0 -> doubled
    auto h = fixtures::path31();
    auto [g, p] = gen_reporting_lb(h, 0);
    CHECK(p.doubled);
    CHECK(p.lambda == 2);
    CHECK(p.alpha == 0);
    CHECK(p.lambda_prime == 1);
    CHECK(p.s == 3);
    CHECK(g.edge(*g.find_edge(0, 3)).w == 1);

    auto brute = brute_steiner_mincut(g);
    CHECK(brute.lambda == 1);
    REQUIRE(brute.mincut_sides.size() == 1); // C_m is the unique Steiner mincut
    CHECK(brute.mincut_sides[0].count() == 1);
    CHECK(brute.mincut_sides[0].contains(p.s));
}

TEST_CASE("G_s(H) reporting lemma: C_m changes exactly for vital edges of H") {
    auto h = fixtures::triangles_bridge();
    auto h_brute = brute_steiner_mincut(h);
    auto [g, p] = gen_reporting_lb(h, 0);
    auto o = build_full_oracle(g);
    for (int i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edge(i);
        Capacity w = g.edge(*g.find_edge(e.u, e.v)).w;
        auto ans = cut_query(o, e.u, e.v, w);
        VertexSet side(g.vertex_count());
        for (Vertex v : ans.side) side.insert(v);
        bool is_cm = fixtures::same_bipartition(side, fixtures::from_ids(g.vertex_count(), {p.s}));
        INFO("edge=(", e.u, ",", e.v, ")");
        CHECK(is_cm == !h_brute.vital[i]);
    }
}

TEST_CASE("G_s(H) requires a vital edge") {
    // lambda = 0 (the Steiner vertices are disconnected), so no edge removal
    // can reduce it and alpha is undefined.
    auto h = fixtures::parse_text("p 3 1\ns 0\ns 1\ne 1 2 5\n");
    auto brute = brute_steiner_mincut(h);
    REQUIRE(brute.lambda == 0);
    bool any_vital = false;
    for (char v : brute.vital) any_vital |= v != 0;
    REQUIRE_FALSE(any_vital);
    CHECK_THROWS_AS(gen_reporting_lb(h, 0), std::invalid_argument);
}

TEST_CASE("random graphs are deterministic, connected, and honor |S|") {
    auto a = gen_random(8, 0.5, 1, 10, 0.5, 1);
    auto b = gen_random(8, 0.5, 1, 10, 0.5, 1);
    std::ostringstream sa, sb;
    a.write(sa);
    b.write(sb);
    CHECK(sa.str() == sb.str());
    CHECK(a.steiner_count() == 4);

    auto all_steiner = gen_random(6, 0.3, 1, 5, 1.0, 9);
    CHECK(all_steiner.steiner_count() == 6);

    auto clique = gen_random(12, 1.0, 1, 1, 0.25, 7);
    CHECK(clique.edge_count() == 12 * 11 / 2);
    CHECK(clique.steiner_count() == 3);

    CHECK_THROWS_AS(gen_random(8, 0.5, 1, 10, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_k(1, 0.5, 1, 10, 2, 1), std::invalid_argument);

    // spanning tree keeps every instance connected
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto g = gen_random_k(9, 0.2, 1, 4, 3, seed);
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int visited = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++visited;
            for (int id : g.incident(v)) {
                const auto& e = g.edge(id);
                Vertex o = e.u == v ? e.v : e.u;
                if (!seen[o]) {
                    seen[o] = 1;
                    stack.push_back(o);
                }
            }
        }
        CHECK(visited == g.vertex_count());
    }
}

TEST_CASE("bench family graphs are reproducible") {
    auto a = bench_family_graph(64, 64, 3);
    auto b = bench_family_graph(64, 64, 3);
    std::ostringstream sa, sb;
    a.write(sa);
    b.write(sb);
    CHECK(sa.str() == sb.str());
    CHECK(a.steiner_count() == 64);
    CHECK(a.edge_count() >= 63);
}

} // TEST_SUITE
