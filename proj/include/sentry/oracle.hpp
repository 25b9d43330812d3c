#pragma once

#include <vector>

#include "sentry/cap_tree.hpp"
#include "sentry/gomory_hu.hpp"
#include "sentry/graph.hpp"
#include "sentry/laminar.hpp"
#include "sentry/steiner.hpp"

namespace sentry {

// Per-nonSteiner-vertex laminar trees over the nearest mincuts of the vital
// Type-3 edges incident to that vertex.
struct Type3Forest {
    std::vector<Vertex> owners;      // nonSteiner endpoints with Type-3 edges, ascending
    std::vector<LaminarTree> trees;  // parallel to owners
    std::vector<int> tree_of;        // vertex -> index into trees, -1 if absent

    const LaminarTree* tree_for(Vertex u) const {
        int i = u >= 0 && u < static_cast<int>(tree_of.size()) ? tree_of[u] : -1;
        return i < 0 ? nullptr : &trees[i];
    }
};

struct CutAnswer {
    Capacity capacity = 0; // Steiner mincut capacity of the modified graph
    bool changed = false;
    std::vector<Vertex> side; // sorted vertex ids of the reported Steiner cut
};

// The composite sensitivity oracle: capacity tree over E, augmented Type-1
// tree, Gomory-Hu tree for Type-2, laminar forest for vital Type-3.
struct FullOracle {
    WeightedGraph graph;
    Capacity lambda = 0;
    std::vector<Vertex> base_cut; // a Steiner mincut, sorted
    CapTree cap_tree;             // over E, capacities only
    CapTree type1;                // over Type-1 edges, augmented with cuts
    GomoryHuTree gh;
    Type3Forest type3;
};

// Capacity tree over E augmented with the splitting cut at every internal
// node; valid for every edge type and quadratic in the worst case.
struct BaselineOracle {
    WeightedGraph graph;
    Capacity lambda = 0;
    std::vector<Vertex> base_cut;
    CapTree tree;
};

struct SpaceReport {
    std::size_t words_type1 = 0;
    std::size_t words_gh = 0;
    std::size_t words_type3 = 0;
    std::size_t words_captree = 0;
    std::size_t total() const { return words_type1 + words_gh + words_type3 + words_captree; }
};

FullOracle build_full_oracle(const WeightedGraph& g);
BaselineOracle build_baseline_oracle(const WeightedGraph& g);

CapAnswer cap_query(const FullOracle& o, Vertex u, Vertex v, Capacity delta);

CutAnswer cut_query(const FullOracle& o, Vertex u, Vertex v, Capacity delta);
CutAnswer baseline_cut_query(const BaselineOracle& o, Vertex u, Vertex v, Capacity delta);

// Emission variants reusing the caller's buffer; return (capacity, changed).
CapAnswer cut_query_into(const FullOracle& o, Vertex u, Vertex v, Capacity delta,
                         std::vector<Vertex>& side);
CapAnswer baseline_cut_query_into(const BaselineOracle& o, Vertex u, Vertex v, Capacity delta,
                                  std::vector<Vertex>& side);

SpaceReport space_report(const FullOracle& o);
std::size_t baseline_words(const BaselineOracle& o);

} // namespace sentry
