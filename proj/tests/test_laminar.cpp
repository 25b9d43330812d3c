#include <doctest.h>

#include "fixtures.hpp"
#include "sentry/laminar.hpp"

using namespace sentry;
using fixtures::from_ids;

TEST_SUITE("laminar") {

TEST_CASE("nested family over three vertices") {
    // {{a},{b},{a,b}} over {a,b,c}
    std::vector<VertexSet> fam = {from_ids(3, {0}), from_ids(3, {1}), from_ids(3, {0, 1})};
    auto t = LaminarTree::build(fam, 3);
    CHECK(t.node_count() == 4); // root + three members

    auto a = t.subtree_set(0);
    REQUIRE(a.has_value());
    CHECK(*a == std::vector<Vertex>{0});
    auto b = t.subtree_set(1);
    REQUIRE(b.has_value());
    CHECK(*b == std::vector<Vertex>{1});
    CHECK_FALSE(t.subtree_set(2).has_value()); // c maps to the root

    // phi(a) sits under the node for {a,b}, which hangs off the root
    int pa = t.phi(0);
    CHECK(t.parent(t.parent(pa)) == 0);
}

TEST_CASE("empty family maps everything to the root") {
    auto t = LaminarTree::build({}, 2);
    CHECK(t.node_count() == 1);
    CHECK_FALSE(t.subtree_set(0).has_value());
    CHECK_FALSE(t.subtree_set(1).has_value());
}

TEST_CASE("crossing members are rejected") {
    std::vector<VertexSet> fam = {from_ids(3, {0, 1}), from_ids(3, {1, 2})};
    CHECK_THROWS_AS(LaminarTree::build(fam, 3), NotLaminar);
}

TEST_CASE("maximal member query") {
    std::vector<VertexSet> fam = {from_ids(3, {0, 1})};
    auto t = LaminarTree::build(fam, 3);
    auto got = t.subtree_set(1);
    REQUIRE(got.has_value());
    CHECK(*got == std::vector<Vertex>{0, 1});
}

TEST_CASE("duplicates collapse to one node") {
    std::vector<VertexSet> fam = {from_ids(4, {0, 1}), from_ids(4, {0, 1}), from_ids(4, {2})};
    auto t = LaminarTree::build(fam, 4);
    CHECK(t.node_count() == 3);
    CHECK(t.phi(0) == t.phi(1));
}

TEST_CASE("round-trip: every member is some subtree, every subtree a member") {
    std::vector<VertexSet> fam = {from_ids(6, {0, 1, 2}), from_ids(6, {0}),  from_ids(6, {1}),
                                  from_ids(6, {4, 5}),    from_ids(6, {4})};
    auto t = LaminarTree::build(fam, 6);
    CHECK(t.node_count() <= 2 * static_cast<int>(fam.size()) + 1);
    for (const auto& member : fam) {
        Vertex probe = member.to_vector().front();
        // walk up from phi(probe) until the subtree matches
        bool found = false;
        std::vector<Vertex> got;
        for (Vertex v : member.to_vector()) {
            if (t.subtree_set_into(v, got) && got == member.to_vector()) {
                found = true;
                break;
            }
        }
        CAPTURE(probe);
        CHECK(found);
    }
    // each vertex stored once across member lists
    CHECK(t.stored_vertex_ids() == 6 - 1); // vertex 3 maps to the root
}

TEST_CASE("disjoint members become siblings") {
    std::vector<VertexSet> fam = {from_ids(5, {0, 1}), from_ids(5, {2, 3})};
    auto t = LaminarTree::build(fam, 5);
    CHECK(t.parent(t.phi(0)) == 0);
    CHECK(t.parent(t.phi(2)) == 0);
    CHECK(t.phi(0) != t.phi(2));
}

TEST_CASE("restore rebuilds an equivalent tree") {
    std::vector<VertexSet> fam = {from_ids(4, {0, 1, 2}), from_ids(4, {1})};
    auto t = LaminarTree::build(fam, 4);
    std::vector<int> parent;
    std::vector<std::vector<Vertex>> members;
    for (int i = 0; i < t.node_count(); ++i) {
        parent.push_back(t.parent(i));
        members.push_back(t.members_at(i));
    }
    auto r = LaminarTree::restore(4, parent, members);
    for (Vertex v = 0; v < 4; ++v) {
        auto a = t.subtree_set(v);
        auto b = r.subtree_set(v);
        CHECK(a == b);
    }
}

} // TEST_SUITE
