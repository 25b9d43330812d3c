#pragma once

#include <unordered_set>
#include <vector>

#include "sentry/graph.hpp"
#include "sentry/steiner.hpp"

namespace sentry {

struct CapAnswer {
    Capacity capacity = 0; // min(lambda_S, cap_at_lca - delta)
    bool changed = false;  // cap_at_lca - delta < lambda_S
};

// Full binary tree over a covered edge set: each internal node splits its
// vertex cell by the cheapest edge-mincut among edges inside the cell, and
// the LCA of two covered endpoints then carries exactly that edge's mincut
// capacity. Optionally each internal node is augmented with the splitting
// cut itself (the quadratic-space variant used for cut reporting).
class CapTree {
public:
    struct Node {
        Capacity cap = -1;
        int left = -1, right = -1; // leaves keep -1
        int selected_edge = -1;    // edge id chosen at an internal node
    };

    CapTree() = default;

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int leaf_count() const { return leaves_; }
    const Node& node(int id) const { return nodes_[id]; }
    int leaf_of(Vertex v) const { return v >= 0 && v < static_cast<int>(leaf_of_.size()) ? leaf_of_[v] : -1; }
    Capacity lambda() const { return lambda_; }
    bool augmented() const { return !node_cuts_.empty(); }
    const std::vector<Vertex>& node_cut(int id) const { return node_cuts_[id]; }
    bool covers(Vertex u, Vertex v) const;

    // LCA of the two endpoint leaves; constant time after the Euler-tour
    // sparse table is built.
    int lca(Vertex u, Vertex v) const;

    std::size_t stored_words() const;     // node records + leaf map entries
    std::size_t stored_cut_words() const; // augmented cut vertex ids

    // Rebuilds a tree from serialized parts (root must be node 0); the
    // covered set is re-derived from the edge list.
    static CapTree restore(std::vector<Node> nodes, std::vector<int> leaf_of,
                           std::vector<std::vector<Vertex>> node_cuts, Capacity lambda_s,
                           const WeightedGraph& g, const std::vector<int>& edge_ids);

    friend CapTree build_cap_tree(const WeightedGraph& g, const std::vector<int>& edge_ids,
                                  const VertexSet& universe, const std::vector<EdgeMincut>& mincuts,
                                  Capacity lambda_s, bool augment);

private:
    std::vector<Node> nodes_;
    std::vector<int> leaf_of_;
    std::vector<std::vector<Vertex>> node_cuts_;
    std::unordered_set<std::uint64_t> covered_; // validation only, not counted as stored words
    bool covers_all_ = false;                   // edge set == E, membership check short-circuits
    Capacity lambda_ = 0;
    int leaves_ = 0;
    int root_ = -1;
    // Euler tour + sparse table over depths.
    std::vector<int> euler_, depth_, first_;
    std::vector<std::vector<int>> sparse_;
    void build_lca();
};

// mincuts must hold an entry for every edge id in edge_ids (all_edge_mincuts
// supplies them). The universe is the vertex cell the recursion starts from.
CapTree build_cap_tree(const WeightedGraph& g, const std::vector<int>& edge_ids,
                       const VertexSet& universe, const std::vector<EdgeMincut>& mincuts,
                       Capacity lambda_s, bool augment);

// Convenience: covers the whole edge set over universe V.
CapTree build_cap_tree(const WeightedGraph& g);

CapAnswer cap_query(const CapTree& t, const WeightedGraph& g, Vertex u, Vertex v, Capacity delta);

// With delta = w(e) this decides vitality.
bool edge_vitality_via_tree(const CapTree& t, const WeightedGraph& g, Vertex u, Vertex v,
                            Capacity delta);

} // namespace sentry
