#include "sentry/brute.hpp"

#include <stdexcept>

namespace sentry {

namespace {

constexpr int kMaxBruteVertices = 20;

void check_size(const WeightedGraph& g) {
    if (g.vertex_count() > kMaxBruteVertices)
        throw std::invalid_argument("brute force limited to n <= 20");
    if (g.steiner_count() < 2) throw std::invalid_argument("need |S| >= 2");
}

} // namespace

BruteForceAnswer brute_steiner_mincut(const WeightedGraph& g) {
    check_size(g);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const auto& edges = g.edges();

    std::uint32_t steiner_mask = 0;
    for (Vertex s : g.steiner_vertices()) steiner_mask |= 1u << s;
    const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);

    BruteForceAnswer ans;
    ans.no_cut_sentinel = g.total_capacity() + 1;
    ans.lambda = ans.no_cut_sentinel;
    ans.edge_mincut_cap.assign(m, ans.no_cut_sentinel);
    ans.edge_noncontrib_cap.assign(m, ans.no_cut_sentinel);
    ans.vital.assign(m, 0);

    std::vector<std::uint32_t> side_masks;
    // Sides not containing vertex 0: each bipartition visited exactly once.
    const std::uint32_t limit = 1u << (n - 1);
    for (std::uint32_t bits = 1; bits < limit; ++bits) {
        std::uint32_t side = bits << 1;
        bool in = (steiner_mask & side) != 0;
        bool out = (steiner_mask & (full & ~side)) != 0;
        if (!in || !out) continue;
        Capacity cap = 0;
        for (const auto& e : edges)
            if (((side >> e.u) & 1) != ((side >> e.v) & 1)) cap += e.w;
        if (cap < ans.lambda) {
            ans.lambda = cap;
            side_masks.assign(1, side);
        } else if (cap == ans.lambda) {
            side_masks.push_back(side);
        }
        for (int i = 0; i < m; ++i) {
            bool contributes = ((side >> edges[i].u) & 1) != ((side >> edges[i].v) & 1);
            auto& slot = contributes ? ans.edge_mincut_cap[i] : ans.edge_noncontrib_cap[i];
            if (cap < slot) slot = cap;
        }
    }
    for (std::uint32_t mask : side_masks) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.insert(v);
        ans.mincut_sides.push_back(std::move(s));
    }
    for (int i = 0; i < m; ++i)
        ans.vital[i] = ans.edge_mincut_cap[i] - edges[i].w < ans.lambda ? 1 : 0;
    return ans;
}

Capacity BruteForceAnswer::cap_after(const WeightedGraph& g, int edge_id, Capacity delta) const {
    if (edge_id < 0 || edge_id >= g.edge_count())
        throw QueryError(QueryError::Kind::UnknownEdge, "bad edge id");
    if (delta < 0 || delta > g.edge(edge_id).w)
        throw QueryError(QueryError::Kind::DeltaOutOfRange, "delta out of range");
    Capacity with = edge_mincut_cap[edge_id] - delta;
    Capacity without = edge_noncontrib_cap[edge_id];
    return std::min(with, without);
}

Capacity brute_cap_after(const WeightedGraph& g, Vertex u, Vertex v, Capacity delta) {
    auto id = g.find_edge(u, v);
    if (!id) throw QueryError(QueryError::Kind::UnknownEdge, "no such edge");
    return brute_steiner_mincut(g).cap_after(g, *id, delta);
}

std::vector<VertexSet> brute_mincuts_for_edge(const WeightedGraph& g, Vertex x, Vertex y) {
    check_size(g);
    if (!g.find_edge(x, y)) throw QueryError(QueryError::Kind::UnknownEdge, "no such edge");
    const int n = g.vertex_count();
    std::uint32_t steiner_mask = 0;
    for (Vertex s : g.steiner_vertices()) steiner_mask |= 1u << s;
    const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);

    Capacity best = g.total_capacity() + 1;
    std::vector<std::uint32_t> sides;
    for (std::uint32_t bits = 1; bits < (1u << (n - 1)); ++bits) {
        std::uint32_t side = bits << 1;
        if (((side >> x) & 1) == ((side >> y) & 1)) continue;
        if (!(steiner_mask & side) || !(steiner_mask & (full & ~side))) continue;
        Capacity cap = 0;
        for (const auto& e : g.edges())
            if (((side >> e.u) & 1) != ((side >> e.v) & 1)) cap += e.w;
        // Orient to contain x.
        std::uint32_t oriented = ((side >> x) & 1) ? side : (full & ~side);
        if (cap < best) {
            best = cap;
            sides.assign(1, oriented);
        } else if (cap == best) {
            sides.push_back(oriented);
        }
    }
    std::vector<VertexSet> out;
    for (std::uint32_t mask : sides) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.insert(v);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace sentry
