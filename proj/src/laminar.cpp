#include "sentry/laminar.hpp"

#include <algorithm>

namespace sentry {

LaminarTree LaminarTree::build(const std::vector<VertexSet>& family, int universe) {
    LaminarTree t;
    t.universe_ = universe;
    t.parent_.push_back(-1);
    t.children_.emplace_back();
    t.members_.emplace_back();

    // Decreasing size with a deterministic tie-break; duplicates collapse.
    std::vector<const VertexSet*> order;
    order.reserve(family.size());
    for (const auto& c : family) {
        if (c.universe_size() != universe)
            throw std::invalid_argument("family member over wrong universe");
        if (c.empty()) throw std::invalid_argument("family member must be nonempty");
        order.push_back(&c);
    }
    std::stable_sort(order.begin(), order.end(), [](const VertexSet* a, const VertexSet* b) {
        int ca = a->count(), cb = b->count();
        if (ca != cb) return ca > cb;
        return a->to_vector() < b->to_vector();
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [](const VertexSet* a, const VertexSet* b) { return *a == *b; }),
                order.end());

    for (const VertexSet* cp : order) {
        const VertexSet& c = *cp;
        // All vertices of a new (smaller) member must currently share one
        // node; anything else means the member crosses an inserted one.
        int host = -2;
        bool crossing = false;
        c.for_each([&](Vertex v) {
            int p = t.phi(v);
            if (host == -2) {
                host = p;
            } else if (host != p) {
                crossing = true;
            }
        });
        if (crossing) throw NotLaminar("family members cross");

        int id = t.node_count();
        t.parent_.push_back(host);
        t.children_.emplace_back();
        t.members_.emplace_back();
        t.children_[host].push_back(id);

        // Vertices move from the host into the new node; deeper members pull
        // them further down later.
        auto& host_members = t.members_[host];
        if (host != 0) {
            host_members.erase(std::remove_if(host_members.begin(), host_members.end(),
                                              [&](Vertex v) { return c.contains(v); }),
                               host_members.end());
        }
        auto& mine = t.members_[id];
        c.for_each([&](Vertex v) {
            mine.push_back(v);
            t.phi_[v] = id;
        });
    }
    return t;
}

int LaminarTree::phi(Vertex x) const {
    if (x < 0 || x >= universe_) throw std::invalid_argument("vertex outside universe");
    auto it = phi_.find(x);
    return it == phi_.end() ? 0 : it->second;
}

bool LaminarTree::subtree_set_into(Vertex x, std::vector<Vertex>& out) const {
    int node = phi(x);
    out.clear();
    if (node == 0) return false;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        out.insert(out.end(), members_[cur].begin(), members_[cur].end());
        for (int c : children_[cur]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return true;
}

std::optional<std::vector<Vertex>> LaminarTree::subtree_set(Vertex x) const {
    std::vector<Vertex> out;
    if (!subtree_set_into(x, out)) return std::nullopt;
    return out;
}

std::size_t LaminarTree::stored_vertex_ids() const {
    std::size_t total = 0;
    for (const auto& m : members_) total += m.size();
    return total;
}

LaminarTree LaminarTree::restore(int universe, std::vector<int> parent,
                                 std::vector<std::vector<Vertex>> members) {
    if (parent.size() != members.size() || parent.empty() || parent[0] != -1)
        throw std::invalid_argument("bad laminar tree parts");
    LaminarTree t;
    t.universe_ = universe;
    t.parent_ = std::move(parent);
    t.members_ = std::move(members);
    t.children_.assign(t.parent_.size(), {});
    for (std::size_t i = 1; i < t.parent_.size(); ++i) {
        int p = t.parent_[i];
        if (p < 0 || p >= static_cast<int>(t.parent_.size()))
            throw std::invalid_argument("bad laminar tree parent");
        t.children_[p].push_back(static_cast<int>(i));
    }
    for (std::size_t i = 1; i < t.members_.size(); ++i)
        for (Vertex v : t.members_[i]) t.phi_[v] = static_cast<int>(i);
    return t;
}

} // namespace sentry
