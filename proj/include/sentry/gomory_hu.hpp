#pragma once

#include <iosfwd>
#include <vector>

#include "sentry/graph.hpp"

namespace sentry {

// Cut tree built by the classic contraction algorithm (not Gusfield's
// simplification): removing any tree edge yields a genuine minimum cut of G
// between its endpoints, so the tree doubles as a cut-reporting oracle.
class GomoryHuTree {
public:
    GomoryHuTree() = default;
    GomoryHuTree(std::vector<Vertex> parent, std::vector<Capacity> cap);

    int vertex_count() const { return static_cast<int>(parent_.size()); }
    Vertex parent(Vertex v) const { return parent_[v]; }
    Capacity parent_cap(Vertex v) const { return cap_[v]; }

    // Minimum edge capacity on the tree path; O(log n) via binary lifting.
    Capacity path_min(Vertex u, Vertex v) const;

    // Capacity plus the component of u after removing the minimizing path
    // edge (the minimum edge closest to u on ties). Emission time is linear
    // in the side size.
    Capacity query_cut_into(Vertex u, Vertex v, std::vector<Vertex>& side) const;
    std::pair<Capacity, Cut> query(Vertex u, Vertex v) const;

    Capacity global_mincut_capacity() const { return global_cap_; }
    const std::vector<Vertex>& global_mincut_side() const { return global_side_; }

    // One line per non-root vertex: `t <v> <parent> <cap>`.
    void write(std::ostream& out) const;
    static GomoryHuTree read(std::istream& in, int n);

private:
    void build_index();
    // Child vertex of the minimizing edge on the v->ancestor chain plus the
    // chain minimum; blocks closer to v win ties.
    struct ChainMin {
        Capacity cap;
        Vertex arg;
    };

    std::vector<Vertex> parent_;
    std::vector<Capacity> cap_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<int> depth_;
    std::vector<std::vector<Vertex>> up_;
    std::vector<std::vector<ChainMin>> upmin_;
    Capacity global_cap_ = 0;
    std::vector<Vertex> global_side_;
};

GomoryHuTree build_gh_tree(const WeightedGraph& g);

// Sensitivity query for S = V: after reducing w(e) by delta, the global
// mincut and its capacity.
std::pair<Capacity, std::vector<Vertex>> global_failure_query(const GomoryHuTree& t,
                                                              const WeightedGraph& g, Vertex u,
                                                              Vertex v, Capacity delta);

} // namespace sentry
