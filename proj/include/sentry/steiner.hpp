#pragma once

#include <vector>

#include "sentry/graph.hpp"
#include "sentry/maxflow.hpp"

namespace sentry {

// Minimum-capacity Steiner cut to which an edge contributes, plus vitality.
// The stored side contains x = the lower endpoint.
struct EdgeMincut {
    GraphEdge edge;
    Capacity capacity = 0;
    Cut cut;
    bool vital = false;
};

struct NearestMincut {
    Vertex steiner_end = -1;
    Vertex nonsteiner_end = -1;
    Cut cut; // contains steiner_end, excludes nonsteiner_end
};

// lambda_S and a witnessing Steiner mincut; the side contains the lowest-id
// Steiner vertex.
std::pair<Capacity, Cut> steiner_mincut(const WeightedGraph& g);

EdgeMincut mincut_for_edge(const WeightedGraph& g, Vertex u, Vertex v);
EdgeMincut mincut_for_edge(const WeightedGraph& g, Vertex u, Vertex v, Capacity lambda_s);

// Per-edge-id mincuts for the whole graph; computes lambda_S once and reuses
// one flow solver across all edges.
std::vector<EdgeMincut> all_edge_mincuts(const WeightedGraph& g, Capacity lambda_s);

bool is_vital(const WeightedGraph& g, Vertex u, Vertex v);

// Unique inclusion-minimal mincut containing the Steiner endpoint, defined
// for vital Type-3 edges only. Candidates from every qualifying Steiner pair
// are compared and required to agree, which turns the uniqueness guarantee
// into a runtime check.
NearestMincut nearest_mincut(const WeightedGraph& g, Vertex a, Vertex b);

namespace detail {
// Shared solver variants used by the oracle builders.
EdgeMincut mincut_for_edge_impl(const WeightedGraph& g, MaxFlow& mf, Vertex u, Vertex v,
                                Capacity lambda_s);
NearestMincut nearest_mincut_impl(const WeightedGraph& g, MaxFlow& mf, Vertex a, Vertex b,
                                  const EdgeMincut& mc, Capacity lambda_s);
} // namespace detail

} // namespace sentry
