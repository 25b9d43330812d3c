#include "sentry/maxflow.hpp"

#include <algorithm>
#include <deque>

namespace sentry {

MaxFlow::MaxFlow(const WeightedGraph& g) : g_(&g), n_(g.vertex_count()) {
    inf_ = g.total_capacity() + 1;
    adj_.resize(n_ + 2);
    arc_to_.reserve(2 * g.edge_count());
    // An undirected edge of capacity w becomes a mutually-reverse arc pair,
    // each with capacity w.
    for (const auto& e : g.edges()) {
        int a = static_cast<int>(arc_to_.size());
        arc_to_.push_back(e.v);
        arc_to_.push_back(e.u);
        arc_cap0_.push_back(e.w);
        arc_cap0_.push_back(e.w);
        adj_[e.u].push_back(a);
        adj_[e.v].push_back(a + 1);
    }
    base_arcs_ = arc_to_.size();
    level_.resize(n_ + 2);
    iter_.resize(n_ + 2);
}

bool MaxFlow::bfs_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> q;
    level_[src_] = 0;
    q.push_back(src_);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int a : adj_[v]) {
            int to = arc_to_[a];
            if (arc_cap_[a] > 0 && level_[to] < 0) {
                level_[to] = level_[v] + 1;
                q.push_back(to);
            }
        }
    }
    return level_[dst_] >= 0;
}

Capacity MaxFlow::dfs(int v, Capacity limit) {
    if (v == dst_) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
        int a = adj_[v][i];
        int to = arc_to_[a];
        if (arc_cap_[a] <= 0 || level_[to] != level_[v] + 1) continue;
        Capacity pushed = dfs(to, std::min(limit, arc_cap_[a]));
        if (pushed > 0) {
            arc_cap_[a] -= pushed;
            arc_cap_[a ^ 1] += pushed;
            return pushed;
        }
    }
    return 0;
}

MinCutResult MaxFlow::solve(std::span<const Vertex> sources, std::span<const Vertex> sinks,
                            bool want_minimal) {
    if (sources.empty() || sinks.empty())
        throw std::invalid_argument("min_cut: empty terminal set");
    VertexSet smask(n_);
    for (Vertex v : sources) {
        if (v < 0 || v >= n_) throw std::invalid_argument("min_cut: terminal out of range");
        smask.insert(v);
    }
    for (Vertex v : sinks) {
        if (v < 0 || v >= n_) throw std::invalid_argument("min_cut: terminal out of range");
        if (smask.contains(v)) throw std::invalid_argument("min_cut: sources and sinks overlap");
    }

    src_ = n_;
    dst_ = n_ + 1;
    arc_to_.resize(base_arcs_);
    arc_cap_ = arc_cap0_;
    arc_cap_.resize(base_arcs_);
    adj_[src_].clear();
    adj_[dst_].clear();
    std::vector<int> touched; // real-vertex adjacency entries to undo
    auto add_super = [&](int from, int to) {
        int a = static_cast<int>(arc_to_.size());
        arc_to_.push_back(to);
        arc_to_.push_back(from);
        arc_cap_.push_back(inf_);
        arc_cap_.push_back(0);
        adj_[from].push_back(a);
        adj_[to].push_back(a + 1);
        touched.push_back(from < n_ ? from : to);
    };
    for (Vertex v : sources) add_super(src_, v);
    for (Vertex v : sinks) add_super(v, dst_);

    Capacity flow = 0;
    while (bfs_levels()) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (Capacity pushed = dfs(src_, inf_)) flow += pushed;
    }

    MinCutResult r;
    r.capacity = flow;
    r.minimal = true;
    (void)want_minimal; // the residual-reachable side is minimal either way
    // Residual reachability from the contracted source = inclusion-minimal
    // source side.
    VertexSet side(n_);
    {
        std::vector<char> seen(n_ + 2, 0);
        std::deque<int> q;
        seen[src_] = 1;
        q.push_back(src_);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int a : adj_[v]) {
                int to = arc_to_[a];
                if (arc_cap_[a] > 0 && !seen[to]) {
                    seen[to] = 1;
                    q.push_back(to);
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (seen[v]) side.insert(v);
    }
    r.side = std::move(side);

    // Undo the super arcs so the solver can be reused.
    for (auto it = touched.rbegin(); it != touched.rend(); ++it) adj_[*it].pop_back();
    return r;
}

MinCutResult min_cut(const FlowProblem& p, bool want_minimal) {
    MaxFlow mf(*p.graph);
    return mf.solve(p.sources, p.sinks, want_minimal);
}

MinCutResult min_cut(const WeightedGraph& g, std::span<const Vertex> sources,
                     std::span<const Vertex> sinks, bool want_minimal) {
    MaxFlow mf(g);
    return mf.solve(sources, sinks, want_minimal);
}

} // namespace sentry
