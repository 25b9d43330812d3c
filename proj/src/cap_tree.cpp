#include "sentry/cap_tree.hpp"

#include <algorithm>

namespace sentry {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

} // namespace

CapTree build_cap_tree(const WeightedGraph& g, const std::vector<int>& edge_ids,
                       const VertexSet& universe, const std::vector<EdgeMincut>& mincuts,
                       Capacity lambda_s, bool augment) {
    CapTree t;
    t.lambda_ = lambda_s;
    t.leaf_of_.assign(g.vertex_count(), -1);
    t.covers_all_ = static_cast<int>(edge_ids.size()) == g.edge_count();
    if (!t.covers_all_)
        for (int id : edge_ids) t.covered_.insert(pair_key(g.edge(id).u, g.edge(id).v));

    struct Frame {
        VertexSet cell;
        std::vector<int> inside; // edge ids with both endpoints in the cell
        int parent;              // node to hook into
        bool left;
    };

    auto edges_inside = [&](const VertexSet& cell, const std::vector<int>& candidates) {
        std::vector<int> keep;
        for (int id : candidates) {
            const auto& e = g.edge(id);
            if (cell.contains(e.u) && cell.contains(e.v)) keep.push_back(id);
        }
        return keep;
    };

    std::vector<Frame> stack;
    stack.push_back({universe, edges_inside(universe, edge_ids), -1, false});

    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        int id = t.node_count();
        t.nodes_.emplace_back();
        if (augment) t.node_cuts_.emplace_back();
        if (f.parent >= 0) (f.left ? t.nodes_[f.parent].left : t.nodes_[f.parent].right) = id;
        if (t.root_ < 0) t.root_ = id;

        if (f.inside.empty()) {
            f.cell.for_each([&](Vertex v) { t.leaf_of_[v] = id; });
            ++t.leaves_;
            continue;
        }

        // Cheapest edge-mincut inside the cell; ties go to the
        // lexicographically smallest (u, v) pair.
        int sel = f.inside[0];
        for (int eid : f.inside) {
            const auto &a = mincuts[eid], &b = mincuts[sel];
            if (a.capacity < b.capacity ||
                (a.capacity == b.capacity &&
                 std::pair(a.edge.u, a.edge.v) < std::pair(b.edge.u, b.edge.v)))
                sel = eid;
        }

        t.nodes_[id].cap = mincuts[sel].capacity;
        t.nodes_[id].selected_edge = sel;
        if (augment) t.node_cuts_[id] = mincuts[sel].cut.side.to_vector();

        // Split by the global mincut for the selected edge; the two endpoints
        // land on opposite sides, so neither child cell is empty.
        const VertexSet& cut = mincuts[sel].cut.side;
        VertexSet left = f.cell & cut;
        VertexSet right = f.cell.minus(cut);
        auto left_edges = edges_inside(left, f.inside);
        auto right_edges = edges_inside(right, f.inside);
        // Right child first so the left child pops first (stable layout).
        stack.push_back({std::move(right), std::move(right_edges), id, false});
        stack.push_back({std::move(left), std::move(left_edges), id, true});
    }

    t.build_lca();
    return t;
}

CapTree build_cap_tree(const WeightedGraph& g) {
    auto [lambda, cut] = steiner_mincut(g);
    std::vector<int> ids(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) ids[i] = i;
    auto mincuts = all_edge_mincuts(g, lambda);
    return build_cap_tree(g, ids, VertexSet::all(g.vertex_count()), mincuts, lambda, false);
}

CapTree CapTree::restore(std::vector<Node> nodes, std::vector<int> leaf_of,
                         std::vector<std::vector<Vertex>> node_cuts, Capacity lambda_s,
                         const WeightedGraph& g, const std::vector<int>& edge_ids) {
    CapTree t;
    t.nodes_ = std::move(nodes);
    t.leaf_of_ = std::move(leaf_of);
    t.node_cuts_ = std::move(node_cuts);
    t.lambda_ = lambda_s;
    t.root_ = t.nodes_.empty() ? -1 : 0;
    for (const auto& nd : t.nodes_)
        if (nd.left < 0) ++t.leaves_;
    t.covers_all_ = static_cast<int>(edge_ids.size()) == g.edge_count();
    if (!t.covers_all_)
        for (int id : edge_ids) t.covered_.insert(pair_key(g.edge(id).u, g.edge(id).v));
    t.build_lca();
    return t;
}

void CapTree::build_lca() {
    euler_.clear();
    depth_.clear();
    first_.assign(nodes_.size(), -1);
    if (root_ < 0) return;
    // Iterative Euler tour.
    struct Item {
        int node, depth, stage;
    };
    std::vector<Item> st{{root_, 0, 0}};
    while (!st.empty()) {
        auto [node, depth, stage] = st.back();
        st.pop_back();
        if (first_[node] < 0) first_[node] = static_cast<int>(euler_.size());
        euler_.push_back(node);
        depth_.push_back(depth);
        if (stage == 0 && nodes_[node].left >= 0) {
            st.push_back({node, depth, 1});
            st.push_back({nodes_[node].left, depth + 1, 0});
        } else if (stage == 1) {
            st.push_back({node, depth, 2});
            st.push_back({nodes_[node].right, depth + 1, 0});
        }
    }
    int m = static_cast<int>(euler_.size());
    int levels = 1;
    while ((1 << levels) <= m) ++levels;
    sparse_.assign(levels, std::vector<int>(m));
    for (int i = 0; i < m; ++i) sparse_[0][i] = i;
    for (int k = 1; k < levels; ++k)
        for (int i = 0; i + (1 << k) <= m; ++i) {
            int a = sparse_[k - 1][i], b = sparse_[k - 1][i + (1 << (k - 1))];
            sparse_[k][i] = depth_[a] <= depth_[b] ? a : b;
        }
}

int CapTree::lca(Vertex u, Vertex v) const {
    int a = first_[leaf_of_[u]], b = first_[leaf_of_[v]];
    if (a > b) std::swap(a, b);
    int span = b - a + 1;
    int k = 31 - __builtin_clz(span);
    int l = sparse_[k][a], r = sparse_[k][b - (1 << k) + 1];
    return euler_[depth_[l] <= depth_[r] ? l : r];
}

bool CapTree::covers(Vertex u, Vertex v) const {
    return covers_all_ || covered_.count(pair_key(u, v)) != 0;
}

std::size_t CapTree::stored_words() const {
    std::size_t words = nodes_.size() * 3; // cap + two child slots per record
    for (int l : leaf_of_)
        if (l >= 0) ++words;
    return words;
}

std::size_t CapTree::stored_cut_words() const {
    std::size_t words = 0;
    for (const auto& c : node_cuts_) words += c.size();
    return words;
}

CapAnswer cap_query(const CapTree& t, const WeightedGraph& g, Vertex u, Vertex v, Capacity delta) {
    auto id = g.find_edge(u, v);
    if (!id) throw QueryError(QueryError::Kind::UnknownEdge, "no such edge");
    if (!t.covers(u, v))
        throw QueryError(QueryError::Kind::NotCovered, "edge not covered by this tree");
    if (delta < 0 || delta > g.edge(*id).w)
        throw QueryError(QueryError::Kind::DeltaOutOfRange, "delta out of range");
    Capacity at_lca = t.node(t.lca(u, v)).cap;
    CapAnswer a;
    a.changed = at_lca - delta < t.lambda();
    a.capacity = std::min(t.lambda(), at_lca - delta);
    return a;
}

bool edge_vitality_via_tree(const CapTree& t, const WeightedGraph& g, Vertex u, Vertex v,
                            Capacity delta) {
    return cap_query(t, g, u, v, delta).changed;
}

} // namespace sentry
