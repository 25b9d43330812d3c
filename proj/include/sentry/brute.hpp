#pragma once

#include <vector>

#include "sentry/graph.hpp"

namespace sentry {

// Exhaustive ground truth obtained by enumerating every vertex bipartition
// (anchor vertex 0 fixed on the complement side). Shares no code with the
// max-flow engine, which is what makes the cross-checks meaningful.
struct BruteForceAnswer {
    Capacity lambda = 0;                       // Steiner mincut capacity
    std::vector<VertexSet> mincut_sides;       // every Steiner mincut, side excluding vertex 0
    std::vector<Capacity> edge_mincut_cap;     // per edge id: min capacity of a Steiner cut it contributes to
    std::vector<Capacity> edge_noncontrib_cap; // per edge id: min capacity of a Steiner cut it avoids (or sentinel)
    std::vector<char> vital;                   // per edge id
    Capacity no_cut_sentinel = 0;              // value used when no qualifying cut exists

    Capacity cap_after(const WeightedGraph& g, int edge_id, Capacity delta) const;
};

// n <= 20 guard; enumeration is 2^(n-1) sides.
BruteForceAnswer brute_steiner_mincut(const WeightedGraph& g);

// Steiner mincut capacity of the graph with w(e) reduced by delta.
Capacity brute_cap_after(const WeightedGraph& g, Vertex u, Vertex v, Capacity delta);

// All mincuts for edge (u,v) oriented to contain x = min(u,v) endpoint given;
// used by the lemma suite, which quantifies over mincuts, not just nearest ones.
std::vector<VertexSet> brute_mincuts_for_edge(const WeightedGraph& g, Vertex x, Vertex y);

} // namespace sentry
