#pragma once

#include <span>
#include <vector>

#include "sentry/graph.hpp"

namespace sentry {

struct FlowProblem {
    const WeightedGraph* graph;
    std::vector<Vertex> sources;
    std::vector<Vertex> sinks;
};

struct MinCutResult {
    Capacity capacity = 0;
    VertexSet side;       // contains all sources, no sinks
    bool minimal = false; // side is the inclusion-minimal minimum-cut source side
};

// Dinic max-flow over an immutable graph. Terminal sets are contracted via a
// super source/sink joined by arcs of capacity 1 + total graph capacity, so
// the arithmetic stays in 64-bit integers and the arcs can never saturate.
// One solver per graph; each solve() resets residual state, so a solver can
// be reused across many terminal pairs. Adjacency order is fixed, which makes
// the returned side reproducible run to run.
class MaxFlow {
public:
    explicit MaxFlow(const WeightedGraph& g);

    MinCutResult solve(std::span<const Vertex> sources, std::span<const Vertex> sinks,
                       bool want_minimal = true);

    MinCutResult solve(std::initializer_list<Vertex> sources, std::initializer_list<Vertex> sinks,
                       bool want_minimal = true) {
        return solve(std::span<const Vertex>(sources.begin(), sources.size()),
                     std::span<const Vertex>(sinks.begin(), sinks.size()), want_minimal);
    }

private:
    Capacity dfs(int v, Capacity limit);
    bool bfs_levels();

    const WeightedGraph* g_;
    int n_ = 0;          // real vertices; super source = n_, super sink = n_ + 1
    Capacity inf_ = 0;
    std::size_t base_arcs_ = 0;
    std::vector<int> arc_to_;
    std::vector<Capacity> arc_cap_;
    std::vector<Capacity> arc_cap0_; // pristine copy of the base arcs
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_, iter_;
    int src_ = 0, dst_ = 0;
};

MinCutResult min_cut(const FlowProblem& p, bool want_minimal = true);
MinCutResult min_cut(const WeightedGraph& g, std::span<const Vertex> sources,
                     std::span<const Vertex> sinks, bool want_minimal = true);

} // namespace sentry
