#include "sentry/oracle.hpp"

#include <algorithm>

#include "sentry/maxflow.hpp"

namespace sentry {

namespace {

std::vector<int> edge_ids_of_kind(const WeightedGraph& g, EdgeKind kind) {
    std::vector<int> ids;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (classify_edge(g, e.u, e.v).kind == kind) ids.push_back(i);
    }
    return ids;
}

VertexSet endpoints_of(const WeightedGraph& g, const std::vector<int>& ids) {
    VertexSet s(g.vertex_count());
    for (int id : ids) {
        s.insert(g.edge(id).u);
        s.insert(g.edge(id).v);
    }
    return s;
}

} // namespace

FullOracle build_full_oracle(const WeightedGraph& g) {
    if (g.steiner_count() < 2) throw std::invalid_argument("need |S| >= 2");
    FullOracle o;
    o.graph = g;
    auto [lambda, witness] = steiner_mincut(o.graph);
    o.lambda = lambda;
    o.base_cut = witness.side.to_vector();

    auto mincuts = all_edge_mincuts(o.graph, lambda);
    std::vector<int> all_ids(o.graph.edge_count());
    for (int i = 0; i < o.graph.edge_count(); ++i) all_ids[i] = i;

    o.cap_tree = build_cap_tree(o.graph, all_ids, VertexSet::all(o.graph.vertex_count()), mincuts,
                                lambda, false);

    auto t1_ids = edge_ids_of_kind(o.graph, EdgeKind::Type1);
    if (!t1_ids.empty())
        o.type1 =
            build_cap_tree(o.graph, t1_ids, endpoints_of(o.graph, t1_ids), mincuts, lambda, true);

    o.gh = build_gh_tree(o.graph);

    // Laminar forest: one tree per nonSteiner endpoint of a Type-3 edge,
    // spanning the nearest mincuts of its vital edges.
    o.type3.tree_of.assign(o.graph.vertex_count(), -1);
    std::vector<std::vector<int>> by_owner(o.graph.vertex_count());
    for (int i = 0; i < o.graph.edge_count(); ++i) {
        const auto& e = o.graph.edge(i);
        EdgeType t = classify_edge(o.graph, e.u, e.v);
        if (t.kind == EdgeKind::Type3) by_owner[t.nonsteiner_end].push_back(i);
    }
    MaxFlow mf(o.graph);
    for (Vertex u = 0; u < o.graph.vertex_count(); ++u) {
        if (by_owner[u].empty()) continue;
        std::vector<VertexSet> family;
        std::vector<std::pair<Vertex, std::size_t>> expected; // steiner end -> family slot
        for (int eid : by_owner[u]) {
            if (!mincuts[eid].vital) continue;
            const auto& e = o.graph.edge(eid);
            auto nm = detail::nearest_mincut_impl(o.graph, mf, e.u, e.v, mincuts[eid], lambda);
            expected.emplace_back(nm.steiner_end, family.size());
            family.push_back(std::move(nm.cut.side));
        }
        int idx = static_cast<int>(o.type3.trees.size());
        o.type3.owners.push_back(u);
        o.type3.tree_of[u] = idx;
        o.type3.trees.push_back(LaminarTree::build(family, o.graph.vertex_count()));
        // The subtree of each Steiner endpoint must reproduce its nearest
        // mincut exactly.
        const LaminarTree& tree = o.type3.trees.back();
        std::vector<Vertex> got;
        for (auto [x, slot] : expected) {
            if (!tree.subtree_set_into(x, got) || got != family[slot].to_vector())
                throw std::logic_error("type-3 forest does not reproduce a nearest mincut");
        }
    }
    return o;
}

BaselineOracle build_baseline_oracle(const WeightedGraph& g) {
    if (g.steiner_count() < 2) throw std::invalid_argument("need |S| >= 2");
    BaselineOracle o;
    o.graph = g;
    auto [lambda, witness] = steiner_mincut(o.graph);
    o.lambda = lambda;
    o.base_cut = witness.side.to_vector();
    auto mincuts = all_edge_mincuts(o.graph, lambda);
    std::vector<int> all_ids(o.graph.edge_count());
    for (int i = 0; i < o.graph.edge_count(); ++i) all_ids[i] = i;
    o.tree = build_cap_tree(o.graph, all_ids, VertexSet::all(o.graph.vertex_count()), mincuts,
                            lambda, true);
    return o;
}

CapAnswer cap_query(const FullOracle& o, Vertex u, Vertex v, Capacity delta) {
    return cap_query(o.cap_tree, o.graph, u, v, delta);
}

CapAnswer cut_query_into(const FullOracle& o, Vertex u, Vertex v, Capacity delta,
                         std::vector<Vertex>& side) {
    CapAnswer ca = cap_query(o.cap_tree, o.graph, u, v, delta);
    if (!ca.changed) {
        side.assign(o.base_cut.begin(), o.base_cut.end());
        return ca;
    }
    EdgeType t = classify_edge(o.graph, u, v);
    switch (t.kind) {
        case EdgeKind::Type1: {
            const auto& cut = o.type1.node_cut(o.type1.lca(u, v));
            side.assign(cut.begin(), cut.end());
            break;
        }
        case EdgeKind::Type2: {
            o.gh.query_cut_into(std::min(u, v), std::max(u, v), side);
            break;
        }
        case EdgeKind::Type3: {
            // The capacity drop certifies vitality, so the forest has the
            // nearest mincut for this edge.
            const LaminarTree* tree = o.type3.tree_for(t.nonsteiner_end);
            if (!tree || !tree->subtree_set_into(t.steiner_end, side))
                throw std::logic_error("vital type-3 edge missing from forest");
            break;
        }
    }
    return ca;
}

CutAnswer cut_query(const FullOracle& o, Vertex u, Vertex v, Capacity delta) {
    CutAnswer out;
    CapAnswer ca = cut_query_into(o, u, v, delta, out.side);
    out.capacity = ca.capacity;
    out.changed = ca.changed;
    return out;
}

CapAnswer baseline_cut_query_into(const BaselineOracle& o, Vertex u, Vertex v, Capacity delta,
                                  std::vector<Vertex>& side) {
    CapAnswer ca = cap_query(o.tree, o.graph, u, v, delta);
    if (!ca.changed) {
        side.assign(o.base_cut.begin(), o.base_cut.end());
        return ca;
    }
    const auto& cut = o.tree.node_cut(o.tree.lca(u, v));
    side.assign(cut.begin(), cut.end());
    return ca;
}

CutAnswer baseline_cut_query(const BaselineOracle& o, Vertex u, Vertex v, Capacity delta) {
    CutAnswer out;
    CapAnswer ca = baseline_cut_query_into(o, u, v, delta, out.side);
    out.capacity = ca.capacity;
    out.changed = ca.changed;
    return out;
}

SpaceReport space_report(const FullOracle& o) {
    SpaceReport r;
    r.words_type1 = o.type1.stored_words() + o.type1.stored_cut_words();
    r.words_gh = 2 * static_cast<std::size_t>(std::max(0, o.graph.vertex_count() - 1));
    for (const auto& tree : o.type3.trees)
        r.words_type3 += 2 * static_cast<std::size_t>(tree.node_count()) + tree.stored_vertex_ids();
    r.words_captree = o.cap_tree.stored_words() + o.base_cut.size() + 1;
    return r;
}

std::size_t baseline_words(const BaselineOracle& o) {
    return o.tree.stored_words() + o.tree.stored_cut_words() + o.base_cut.size() + 1;
}

} // namespace sentry
