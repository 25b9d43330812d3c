#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sentry {

using Vertex = int;
using Capacity = std::int64_t;

// Dynamic bitset over vertex ids 0..n-1. Cut sides, terminal sets and
// recursion cells are all VertexSets.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    static VertexSet all(int universe) {
        VertexSet s(universe);
        for (auto& w : s.bits_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe_size() const { return n_; }

    void insert(Vertex v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(Vertex v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }

    int count() const;
    bool empty() const;
    bool is_proper_nonempty() const { int c = count(); return c > 0 && c < n_; }

    VertexSet complement() const;
    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator|(const VertexSet& o) const;
    VertexSet minus(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    std::vector<Vertex> to_vector() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
            std::uint64_t w = bits_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(static_cast<Vertex>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    void trim();
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct GraphEdge {
    Vertex u, v;   // u < v
    Capacity w;
};

struct Cut {
    VertexSet side;
    Capacity capacity = 0;
};

enum class EdgeKind { Type1, Type2, Type3 };

struct EdgeType {
    EdgeKind kind;
    Vertex steiner_end = -1;      // set for Type3 only
    Vertex nonsteiner_end = -1;   // set for Type3 only
};

// Parse failures carry the 1-based input line and a category.
struct ParseError : std::runtime_error {
    enum class Kind { Malformed, DuplicateSteiner, TooFewSteiner, NegativeCapacity };
    ParseError(Kind k, int line, const std::string& msg);
    Kind kind;
    int line;
};

// Query-side failures, mapped to stable CLI exit codes.
struct QueryError : std::runtime_error {
    enum class Kind { UnknownEdge, DeltaOutOfRange, NotCovered, BadQuery };
    QueryError(Kind k, const std::string& msg);
    Kind kind;
};

// Undirected multigraph with non-negative integer capacities and a Steiner
// flag per vertex. Parallel edges merge on insertion, so edge identity is
// the unordered endpoint pair. Immutable once handed to the algorithms.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const GraphEdge& edge(int id) const { return edges_[id]; }

    // Merges into an existing parallel edge if present. Throws on self-loops,
    // out-of-range ids and negative capacities.
    void add_edge(Vertex u, Vertex v, Capacity w);
    void mark_steiner(Vertex v);

    std::optional<int> find_edge(Vertex u, Vertex v) const;
    const std::vector<int>& incident(Vertex v) const { return incident_[v]; }

    bool is_steiner(Vertex v) const { return steiner_[v] != 0; }
    int steiner_count() const { return steiner_count_; }
    const std::vector<Vertex>& steiner_vertices() const { return steiner_sorted_; }
    VertexSet steiner_set() const;

    Capacity total_capacity() const { return total_capacity_; }

    // Line-oriented format: `p <n> <m>` header, `s <v>` Steiner declarations,
    // `e <u> <v> <w>` edges, '#' comments. m counts edge lines before merging.
    static WeightedGraph parse(std::istream& in);
    void write(std::ostream& out) const;

private:
    static std::uint64_t key(Vertex u, Vertex v);
    int n_ = 0;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<char> steiner_;
    std::vector<Vertex> steiner_sorted_;
    int steiner_count_ = 0;
    Capacity total_capacity_ = 0;
    std::unordered_map<std::uint64_t, int> edge_index_;
};

// Sum of w(e) over edges with exactly one endpoint in side.
Capacity cut_capacity(const WeightedGraph& g, const VertexSet& side);

// True iff side and its complement each hold a Steiner vertex.
bool is_steiner_cut(const WeightedGraph& g, const VertexSet& side);

EdgeType classify_edge(const WeightedGraph& g, Vertex u, Vertex v);

// Canonical text form: sorted vertex ids, space separated, then `cap=<value>`.
std::string format_cut(const std::vector<Vertex>& side, Capacity cap);
std::string format_cut(const VertexSet& side, Capacity cap);

} // namespace sentry
