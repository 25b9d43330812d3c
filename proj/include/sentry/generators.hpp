#pragma once

#include <cstdint>
#include <vector>

#include "sentry/graph.hpp"

namespace sentry {

// Row-major positive integer matrix driving the capacity lower-bound graph:
// rows(n) = floor(n/2), cols(n) = floor((n+1)/2).
struct MatrixInstance {
    std::vector<std::vector<Capacity>> m;

    int rows() const { return static_cast<int>(m.size()); }
    int cols() const { return m.empty() ? 0 : static_cast<int>(m[0].size()); }
    int vertex_count() const { return rows() + cols(); }
    void validate() const;
};

struct GsParams {
    Capacity lambda = 0;       // Steiner mincut of (possibly doubled) H
    Capacity alpha = 0;        // max over vital edges of c(C(e)) - w(e)
    Capacity lambda_prime = 0; // (lambda + alpha) / 2, capacity of the new edge
    Vertex attach = 0;         // endpoint in H
    Vertex s = 0;              // the added vertex
    bool doubled = false;      // capacities of H were doubled for integrality
};

// G(M): left/right cliques of sentinel-infinite edges, cross edges weighted
// by M. The L|R split is the unique finite-capacity Steiner cut, so failing
// (a_i, b_j) drops the Steiner mincut to lambda - M[i][j].
WeightedGraph gen_capacity_lb(const MatrixInstance& m, int steiner_count);

// G(B): both sides cliqued with sentinel-infinite edges, every cross pair
// present with capacity 1 (edge of B) or 0 (non-edge), so the changed flag of
// a full-weight failure reconstructs B.
WeightedGraph gen_bipartite_lb(const std::vector<std::vector<int>>& adjacency, int steiner_left,
                               int steiner_right);

// G_s(H): one extra Steiner vertex s tied to `attach` (a Steiner vertex of
// H; -1 picks the lowest) with capacity
// (lambda + alpha) / 2; doubles H's capacities first when lambda + alpha is
// odd. Requires H to have a vital edge. The whole of V(H) becomes the unique
// Steiner mincut.
std::pair<WeightedGraph, GsParams> gen_reporting_lb(const WeightedGraph& h, Vertex attach = -1);

// Seeded connected random graph: a random spanning tree plus density-chosen
// extra pairs, uniform weights in [wlo, whi].
WeightedGraph gen_random_k(int n, double density, Capacity wlo, Capacity whi, int steiner_count,
                           std::uint64_t seed);
WeightedGraph gen_random(int n, double density, Capacity wlo, Capacity whi,
                         double steiner_fraction, std::uint64_t seed);

// Scaling family used by the bench harness: a heavy path (so edge mincuts
// are prefix-shaped and spread in size) plus ~n/3 light chords.
WeightedGraph bench_family_graph(int n, int steiner_count, std::uint64_t seed);

MatrixInstance random_matrix(int n, Capacity max_entry, std::uint64_t seed);
std::vector<std::vector<int>> random_bipartite(int n, double density, std::uint64_t seed);

} // namespace sentry
