#include "sentry/gomory_hu.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "sentry/maxflow.hpp"

namespace sentry {

GomoryHuTree build_gh_tree(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n == 1) return GomoryHuTree({-1}, {0});

    // Supernode tree; splitting ends when every supernode is a singleton.
    struct Super {
        std::vector<Vertex> members;
        std::vector<std::pair<int, Capacity>> links; // (other supernode, cap)
    };
    std::vector<Super> nodes;
    {
        Super all;
        all.members.resize(n);
        for (int v = 0; v < n; ++v) all.members[v] = v;
        nodes.push_back(std::move(all));
    }

    std::vector<int> slot_of(n, -1); // vertex -> contracted-graph slot

    for (std::size_t xi = 0; xi < nodes.size(); ++xi) {
        while (nodes[xi].members.size() >= 2) {
            Super& X = nodes[xi];

            // Branches of the supernode tree hanging off X; each contracts
            // to a single vertex.
            std::vector<std::vector<int>> branches; // supernode ids per branch
            {
                std::vector<char> seen(nodes.size(), 0);
                seen[xi] = 1;
                for (auto [nb, cap] : X.links) {
                    if (seen[nb]) continue;
                    branches.emplace_back();
                    std::deque<int> q{nb};
                    seen[nb] = 1;
                    while (!q.empty()) {
                        int cur = q.front();
                        q.pop_front();
                        branches.back().push_back(cur);
                        for (auto [nx, c2] : nodes[cur].links)
                            if (!seen[nx]) {
                                seen[nx] = 1;
                                q.push_back(nx);
                            }
                    }
                }
            }

            const int k = static_cast<int>(X.members.size());
            const int total = k + static_cast<int>(branches.size());
            for (int i = 0; i < k; ++i) slot_of[X.members[i]] = i;
            for (std::size_t b = 0; b < branches.size(); ++b)
                for (int sn : branches[b])
                    for (Vertex v : nodes[sn].members) slot_of[v] = k + static_cast<int>(b);

            WeightedGraph gc(total);
            for (const auto& e : g.edges()) {
                int a = slot_of[e.u], b = slot_of[e.v];
                if (a != b) gc.add_edge(a, b, e.w);
            }

            // Split on the two lowest-id members.
            Vertex s = X.members[0], t = X.members[1];
            for (int i = 2; i < k; ++i) {
                Vertex m = X.members[i];
                if (m < s) {
                    t = s;
                    s = m;
                } else if (m < t) {
                    t = m;
                }
            }
            auto r = min_cut(gc, std::vector<Vertex>{slot_of[s]}, std::vector<Vertex>{slot_of[t]});

            Super xa, xb;
            for (Vertex m : X.members)
                (r.side.contains(slot_of[m]) ? xa : xb).members.push_back(m);

            const int xb_id = static_cast<int>(nodes.size());
            std::vector<std::pair<int, Capacity>> old_links = std::move(X.links);
            X.links.clear();

            // Reattach each branch to the side holding its contracted slot.
            std::vector<int> branch_of(nodes.size(), -1);
            for (std::size_t b = 0; b < branches.size(); ++b)
                for (int sn : branches[b]) branch_of[sn] = static_cast<int>(b);
            for (auto [nb, cap] : old_links) {
                int slot = k + branch_of[nb];
                bool to_a = r.side.contains(slot);
                if (to_a) {
                    xa.links.push_back({nb, cap});
                } else {
                    xb.links.push_back({nb, cap});
                }
                for (auto& l : nodes[nb].links)
                    if (l.first == static_cast<int>(xi) && !to_a) l.first = xb_id;
            }
            xa.links.push_back({xb_id, r.capacity});
            xb.links.push_back({static_cast<int>(xi), r.capacity});

            nodes[xi] = std::move(xa);
            nodes.push_back(std::move(xb));
        }
    }

    // Collapse singleton supernodes into a vertex-level tree rooted at 0.
    std::vector<Vertex> super_vertex(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) super_vertex[i] = nodes[i].members[0];
    std::vector<Vertex> parent(n, -1);
    std::vector<Capacity> cap(n, 0);
    {
        std::vector<char> seen(nodes.size(), 0);
        int root_sn = -1;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (super_vertex[i] == 0) root_sn = static_cast<int>(i);
        std::deque<int> q{root_sn};
        seen[root_sn] = 1;
        while (!q.empty()) {
            int cur = q.front();
            q.pop_front();
            for (auto [nb, c] : nodes[cur].links)
                if (!seen[nb]) {
                    seen[nb] = 1;
                    parent[super_vertex[nb]] = super_vertex[cur];
                    cap[super_vertex[nb]] = c;
                    q.push_back(nb);
                }
        }
    }
    return GomoryHuTree(std::move(parent), std::move(cap));
}

GomoryHuTree::GomoryHuTree(std::vector<Vertex> parent, std::vector<Capacity> cap)
    : parent_(std::move(parent)), cap_(std::move(cap)) {
    build_index();
}

void GomoryHuTree::build_index() {
    const int n = vertex_count();
    children_.assign(n, {});
    Vertex root = -1;
    for (int v = 0; v < n; ++v) {
        if (parent_[v] < 0) {
            root = v;
        } else {
            children_[parent_[v]].push_back(v);
        }
    }
    depth_.assign(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex c : children_[order[i]]) {
            depth_[c] = depth_[order[i]] + 1;
            order.push_back(c);
        }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("gomory-hu parent array is not a tree");

    int levels = 1;
    while ((1 << levels) < n) ++levels;
    const Capacity inf = std::numeric_limits<Capacity>::max();
    up_.assign(levels, std::vector<Vertex>(n));
    upmin_.assign(levels, std::vector<ChainMin>(n));
    for (int v = 0; v < n; ++v) {
        up_[0][v] = parent_[v] < 0 ? v : parent_[v];
        upmin_[0][v] = parent_[v] < 0 ? ChainMin{inf, -1} : ChainMin{cap_[v], v};
    }
    auto merge = [&](ChainMin near, ChainMin far) {
        return far.cap < near.cap ? far : near; // ties go to the nearer block
    };
    for (int k = 1; k < levels; ++k)
        for (int v = 0; v < n; ++v) {
            Vertex mid = up_[k - 1][v];
            up_[k][v] = up_[k - 1][mid];
            upmin_[k][v] = merge(upmin_[k - 1][v], upmin_[k - 1][mid]);
        }

    // Cheapest tree edge = global mincut; store the child-side component,
    // oriented to contain vertex 0 for canonical output.
    global_cap_ = inf;
    Vertex arg = -1;
    for (int v = 0; v < n; ++v)
        if (parent_[v] >= 0 && cap_[v] < global_cap_) {
            global_cap_ = cap_[v];
            arg = v;
        }
    if (arg >= 0) {
        std::vector<Vertex> sub;
        std::deque<Vertex> q{arg};
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            sub.push_back(v);
            for (Vertex c : children_[v]) q.push_back(c);
        }
        std::sort(sub.begin(), sub.end());
        if (std::find(sub.begin(), sub.end(), 0) != sub.end()) {
            global_side_ = std::move(sub);
        } else {
            VertexSet in(n);
            for (Vertex v : sub) in.insert(v);
            for (int v = 0; v < n; ++v)
                if (!in.contains(v)) global_side_.push_back(v);
        }
    } else {
        global_cap_ = 0; // single vertex
    }
}

Capacity GomoryHuTree::path_min(Vertex u, Vertex v) const {
    std::vector<Vertex> sink;
    return query_cut_into(u, v, sink);
}

Capacity GomoryHuTree::query_cut_into(Vertex u, Vertex v, std::vector<Vertex>& side) const {
    const int n = vertex_count();
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw QueryError(QueryError::Kind::BadQuery, "gh query needs two distinct vertices");
    const Capacity inf = std::numeric_limits<Capacity>::max();
    ChainMin from_u{inf, -1}, from_v{inf, -1};
    Vertex a = u, b = v;
    auto lift = [&](Vertex& x, int levels_up, ChainMin& acc) {
        for (int k = 0; levels_up; ++k, levels_up >>= 1)
            if (levels_up & 1) {
                const ChainMin& blk = upmin_[k][x];
                if (blk.cap < acc.cap) acc = blk;
                x = up_[k][x];
            }
    };
    if (depth_[a] > depth_[b]) {
        lift(a, depth_[a] - depth_[b], from_u);
    } else if (depth_[b] > depth_[a]) {
        lift(b, depth_[b] - depth_[a], from_v);
    }
    if (a != b) {
        for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k)
            if (up_[k][a] != up_[k][b]) {
                if (upmin_[k][a].cap < from_u.cap) from_u = upmin_[k][a];
                if (upmin_[k][b].cap < from_v.cap) from_v = upmin_[k][b];
                a = up_[k][a];
                b = up_[k][b];
            }
        if (upmin_[0][a].cap < from_u.cap) from_u = upmin_[0][a];
        if (upmin_[0][b].cap < from_v.cap) from_v = upmin_[0][b];
    }
    // Prefer the u-side argmin on ties so the cut hugs u deterministically.
    ChainMin best = from_v.cap < from_u.cap ? from_v : from_u;

    // Component of u after deleting edge (best.arg, parent(best.arg)).
    side.clear();
    const Vertex cut_child = best.arg;
    bool u_below;
    {
        // u is in the subtree of cut_child iff cut_child lies on u's root path.
        Vertex w = u;
        u_below = false;
        int dd = depth_[u] - depth_[cut_child];
        if (dd >= 0) {
            for (int k = 0; dd; ++k, dd >>= 1)
                if (dd & 1) w = up_[k][w];
            u_below = (w == cut_child);
        }
    }
    if (u_below) {
        std::deque<Vertex> q{cut_child};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            side.push_back(x);
            for (Vertex c : children_[x]) q.push_back(c);
        }
    } else {
        // Everything except the subtree of cut_child, walked from the root.
        Vertex root = u;
        while (parent_[root] >= 0) root = parent_[root];
        std::deque<Vertex> q{root};
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            side.push_back(x);
            for (Vertex c : children_[x])
                if (c != cut_child) q.push_back(c);
        }
    }
    std::sort(side.begin(), side.end());
    return best.cap;
}

std::pair<Capacity, Cut> GomoryHuTree::query(Vertex u, Vertex v) const {
    std::vector<Vertex> ids;
    Capacity cap = query_cut_into(u, v, ids);
    VertexSet side(vertex_count());
    for (Vertex x : ids) side.insert(x);
    return {cap, Cut{std::move(side), cap}};
}

void GomoryHuTree::write(std::ostream& out) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (parent_[v] >= 0) out << "t " << v << ' ' << parent_[v] << ' ' << cap_[v] << '\n';
}

GomoryHuTree GomoryHuTree::read(std::istream& in, int n) {
    std::vector<Vertex> parent(n, -1);
    std::vector<Capacity> cap(n, 0);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag != "t") throw std::invalid_argument("bad gomory-hu line: " + line);
        long long v, p, c;
        if (!(ls >> v >> p >> c) || v < 0 || v >= n || p < 0 || p >= n)
            throw std::invalid_argument("bad gomory-hu line: " + line);
        parent[v] = static_cast<Vertex>(p);
        cap[v] = c;
    }
    return GomoryHuTree(std::move(parent), std::move(cap));
}

std::pair<Capacity, std::vector<Vertex>> global_failure_query(const GomoryHuTree& t,
                                                              const WeightedGraph& g, Vertex u,
                                                              Vertex v, Capacity delta) {
    if (g.steiner_count() != g.vertex_count())
        throw QueryError(QueryError::Kind::BadQuery, "global query requires S = V");
    auto id = g.find_edge(u, v);
    if (!id) throw QueryError(QueryError::Kind::UnknownEdge, "no such edge");
    if (delta < 0 || delta > g.edge(*id).w)
        throw QueryError(QueryError::Kind::DeltaOutOfRange, "delta out of range");
    std::vector<Vertex> side;
    Capacity c = t.query_cut_into(u, v, side);
    if (c - delta < t.global_mincut_capacity()) return {c - delta, std::move(side)};
    return {t.global_mincut_capacity(), t.global_mincut_side()};
}

} // namespace sentry
