#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "sentry/graph.hpp"

namespace sentry {

struct NotLaminar : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rooted tree representing a laminar family of vertex sets: a set belongs to
// the family iff it is exactly the vertices mapped into some non-root
// subtree. Vertices contained in no member map to the root implicitly.
class LaminarTree {
public:
    // Members may repeat (duplicates collapse); throws NotLaminar when two
    // members properly cross.
    static LaminarTree build(const std::vector<VertexSet>& family, int universe);

    int universe_size() const { return universe_; }
    int node_count() const { return static_cast<int>(parent_.size()); }
    int member_count() const { return node_count() - 1; }

    // Node the vertex maps to; 0 is the root.
    int phi(Vertex x) const;

    // Vertices of the minimal family member containing x, sorted; nullopt
    // when no member contains x. Emission is linear in the result size.
    std::optional<std::vector<Vertex>> subtree_set(Vertex x) const;
    bool subtree_set_into(Vertex x, std::vector<Vertex>& out) const;

    int parent(int node) const { return parent_[node]; }
    const std::vector<int>& children(int node) const { return children_[node]; }
    const std::vector<Vertex>& members_at(int node) const { return members_[node]; }

    // Total vertex ids held in member lists (root holds none).
    std::size_t stored_vertex_ids() const;

    // Rebuilds from serialized parts (node 0 = root, parent_[0] = -1).
    static LaminarTree restore(int universe, std::vector<int> parent,
                               std::vector<std::vector<Vertex>> members);

private:
    int universe_ = 0;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<Vertex>> members_; // vertices mapped directly to each node
    std::unordered_map<Vertex, int> phi_;      // only non-root mappings stored
};

} // namespace sentry
