#pragma once

#include <sstream>
#include <string>

#include "sentry/graph.hpp"

namespace fixtures {

inline sentry::WeightedGraph parse_text(const std::string& text) {
    std::istringstream in(text);
    return sentry::WeightedGraph::parse(in);
}

// K3 on {a=0, b=1, c=2}, unit weights, S = V.
inline sentry::WeightedGraph k3_global() {
    return parse_text("p 3 3\ns 0\ns 1\ns 2\ne 0 1 1\ne 1 2 1\ne 0 2 1\n");
}

// K3 with S = {a, b}.
inline sentry::WeightedGraph k3_two_steiner() {
    return parse_text("p 3 3\ns 0\ns 1\ne 0 1 1\ne 1 2 1\ne 0 2 1\n");
}

// path a-b-c with w(a,b)=3, w(b,c)=1, S = {a, c}.
inline sentry::WeightedGraph path31() {
    return parse_text("p 3 2\ns 0\ns 2\ne 0 1 3\ne 1 2 1\n");
}

// two unit triangles {a,b,c} and {d,e,f} joined by the unit bridge c-d, S = V.
inline sentry::WeightedGraph triangles_bridge() {
    return parse_text(
        "p 6 7\ns 0\ns 1\ns 2\ns 3\ns 4\ns 5\n"
        "e 0 1 1\ne 1 2 1\ne 0 2 1\n"
        "e 3 4 1\ne 4 5 1\ne 3 5 1\n"
        "e 2 3 1\n");
}

// path s1-u-v-s2, unit weights, S = {s1, s2} (ids 0,1,2,3).
inline sentry::WeightedGraph path4_ends() {
    return parse_text("p 4 3\ns 0\ns 3\ne 0 1 1\ne 1 2 1\ne 2 3 1\n");
}

inline sentry::VertexSet from_ids(int n, std::initializer_list<sentry::Vertex> ids) {
    sentry::VertexSet s(n);
    for (auto v : ids) s.insert(v);
    return s;
}

// Compares cuts as bipartitions: sides matching either orientation are equal.
inline bool same_bipartition(const sentry::VertexSet& a, const sentry::VertexSet& b) {
    return a == b || a == b.complement();
}

} // namespace fixtures
