#include "sentry/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "sentry/steiner.hpp"

namespace sentry {

namespace {

// Bounded sampler on top of mt19937_64 (stable across standard libraries).
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

Capacity uniform_cap(std::mt19937_64& rng, Capacity lo, Capacity hi) {
    return lo + static_cast<Capacity>(next_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

} // namespace

void MatrixInstance::validate() const {
    if (m.empty() || m[0].empty()) throw std::invalid_argument("empty matrix");
    const int c = cols();
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix");
        for (Capacity x : row)
            if (x < 1) throw std::invalid_argument("matrix entries must be positive");
    }
    const int n = vertex_count();
    if (rows() != n / 2 || cols() != (n + 1) / 2)
        throw std::invalid_argument("matrix dimensions do not match any n");
}

WeightedGraph gen_capacity_lb(const MatrixInstance& mi, int steiner_count) {
    mi.validate();
    const int rows = mi.rows(), cols = mi.cols();
    const int n = rows + cols;
    if (steiner_count < 2 || steiner_count > n)
        throw std::invalid_argument("steiner count out of range");

    Capacity finite_total = 0;
    for (const auto& row : mi.m)
        for (Capacity x : row) finite_total += x;
    const Capacity inf = finite_total + 1;

    // L = vertices 0..rows-1, R = rows..n-1. floor(|S|/2) Steiner vertices go
    // to L, the rest to R; remaining slots are nonSteiner.
    WeightedGraph g(n);
    const int sl = std::min(steiner_count / 2, rows);
    const int sr = steiner_count - sl;
    if (sr > cols) throw std::invalid_argument("steiner count does not fit the right side");
    for (int i = 0; i < sl; ++i) g.mark_steiner(i);
    for (int j = 0; j < sr; ++j) g.mark_steiner(rows + j);

    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j) g.add_edge(i, j, inf);
    for (int i = 0; i < cols; ++i)
        for (int j = i + 1; j < cols; ++j) g.add_edge(rows + i, rows + j, inf);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g.add_edge(i, rows + j, mi.m[i][j]);
    return g;
}

WeightedGraph gen_bipartite_lb(const std::vector<std::vector<int>>& adjacency, int steiner_left,
                               int steiner_right) {
    if (adjacency.empty() || adjacency[0].empty()) throw std::invalid_argument("empty bipartite adjacency");
    const int rows = static_cast<int>(adjacency.size());
    const int cols = static_cast<int>(adjacency[0].size());
    const int n = rows + cols;
    if (rows != n / 2 || cols != (n + 1) / 2)
        throw std::invalid_argument("bipartition sizes do not match any n");
    if (steiner_left < 1 || steiner_left > rows || steiner_right < 1 || steiner_right > cols)
        throw std::invalid_argument("need at least one Steiner vertex per side");

    Capacity finite_total = 0;
    for (const auto& row : adjacency) {
        if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged adjacency");
        for (int x : row) {
            if (x != 0 && x != 1) throw std::invalid_argument("adjacency entries must be 0/1");
            finite_total += x;
        }
    }
    const Capacity inf = finite_total + 1;

    WeightedGraph g(n);
    for (int i = 0; i < steiner_left; ++i) g.mark_steiner(i);
    for (int j = 0; j < steiner_right; ++j) g.mark_steiner(rows + j);
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j) g.add_edge(i, j, inf);
    for (int i = 0; i < cols; ++i)
        for (int j = i + 1; j < cols; ++j) g.add_edge(rows + i, rows + j, inf);
    // Zero-capacity cross edges stay in E so failing an absent B-edge is a
    // well-posed query (with delta = 0).
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g.add_edge(i, rows + j, adjacency[i][j]);
    return g;
}

std::pair<WeightedGraph, GsParams> gen_reporting_lb(const WeightedGraph& h, Vertex attach) {
    if (h.steiner_count() < 2) throw std::invalid_argument("H needs |S| >= 2");
    if (attach < 0) attach = h.steiner_vertices().front();
    if (attach >= h.vertex_count()) throw std::invalid_argument("bad attach vertex");
    // The attachment must be Steiner: otherwise a cut enclosing all of S_H
    // away from it costs only its H-capacity and undercuts lambda_prime.
    if (!h.is_steiner(attach))
        throw std::invalid_argument("attach vertex must be in the Steiner set of H");
    // Every bipartition of H must cost >= 1 so cuts that strand s pay more
    // than lambda_prime.
    {
        std::vector<char> seen(h.vertex_count(), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int visited = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++visited;
            for (int id : h.incident(v)) {
                const auto& e = h.edge(id);
                if (e.w <= 0) continue;
                Vertex o = e.u == v ? e.v : e.u;
                if (!seen[o]) {
                    seen[o] = 1;
                    stack.push_back(o);
                }
            }
        }
        if (visited != h.vertex_count())
            throw std::invalid_argument("H must be connected with positive capacities");
    }

    auto derive = [](const WeightedGraph& g, Capacity& lambda, Capacity& alpha, bool& any_vital) {
        lambda = steiner_mincut(g).first;
        alpha = 0;
        any_vital = false;
        auto mincuts = all_edge_mincuts(g, lambda);
        for (const auto& mc : mincuts) {
            if (!mc.vital) continue;
            any_vital = true;
            alpha = std::max(alpha, mc.capacity - mc.edge.w);
        }
    };

    Capacity lambda, alpha;
    bool any_vital;
    derive(h, lambda, alpha, any_vital);
    if (!any_vital) throw std::invalid_argument("H has no vital edge; alpha undefined");

    GsParams p;
    WeightedGraph base = h;
    if ((lambda + alpha) % 2 != 0) {
        // Doubling every capacity preserves all cut comparisons and makes
        // (lambda + alpha) / 2 exact.
        WeightedGraph doubled(h.vertex_count());
        for (Vertex v : h.steiner_vertices()) doubled.mark_steiner(v);
        for (const auto& e : h.edges()) doubled.add_edge(e.u, e.v, 2 * e.w);
        base = std::move(doubled);
        derive(base, lambda, alpha, any_vital);
        p.doubled = true;
    }
    if (alpha >= lambda) throw std::logic_error("alpha must stay below lambda");

    p.lambda = lambda;
    p.alpha = alpha;
    p.lambda_prime = (lambda + alpha) / 2;
    p.attach = attach;
    p.s = base.vertex_count();

    WeightedGraph g(base.vertex_count() + 1);
    for (Vertex v : base.steiner_vertices()) g.mark_steiner(v);
    g.mark_steiner(p.s);
    for (const auto& e : base.edges()) g.add_edge(e.u, e.v, e.w);
    g.add_edge(attach, p.s, p.lambda_prime);

    // V(H) | {s} must come out as the Steiner mincut, with capacity
    // lambda_prime strictly below every cut inherited from H.
    auto [check_lambda, witness] = steiner_mincut(g);
    const int count = witness.side.count();
    bool witness_is_cm = (count == 1 && witness.side.contains(p.s)) ||
                         (count == base.vertex_count() && !witness.side.contains(p.s));
    if (check_lambda != p.lambda_prime || !witness_is_cm)
        throw std::logic_error("G_s(H) construction did not isolate the expected mincut");
    return {std::move(g), p};
}

WeightedGraph gen_random_k(int n, double density, Capacity wlo, Capacity whi, int steiner_count,
                           std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (steiner_count < 2 || steiner_count > n) throw std::invalid_argument("need 2 <= |S| <= n");
    if (wlo < 0 || whi < wlo) throw std::invalid_argument("bad weight range");
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0,1]");

    std::mt19937_64 rng(seed);
    WeightedGraph g(n);

    // Random spanning tree keeps the graph connected.
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[next_below(rng, i + 1)]);
    for (int i = 1; i < n; ++i) {
        Vertex a = perm[i];
        Vertex b = perm[next_below(rng, i)];
        g.add_edge(a, b, uniform_cap(rng, wlo, whi));
    }
    const std::uint64_t scale = 1u << 20;
    const auto threshold = static_cast<std::uint64_t>(density * scale);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.find_edge(u, v)) continue;
            if (next_below(rng, scale) < threshold) g.add_edge(u, v, uniform_cap(rng, wlo, whi));
        }

    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[next_below(rng, i + 1)]);
    for (int i = 0; i < steiner_count; ++i) g.mark_steiner(order[i]);
    return g;
}

WeightedGraph gen_random(int n, double density, Capacity wlo, Capacity whi,
                         double steiner_fraction, std::uint64_t seed) {
    if (steiner_fraction < 0.0 || steiner_fraction > 1.0)
        throw std::invalid_argument("steiner fraction must be in [0,1]");
    int k = static_cast<int>(steiner_fraction * n + 0.5);
    if (k < 2) throw std::invalid_argument("steiner fraction yields |S| < 2");
    return gen_random_k(n, density, wlo, whi, k, seed);
}

WeightedGraph bench_family_graph(int n, int steiner_count, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (steiner_count < 2 || steiner_count > n) throw std::invalid_argument("need 2 <= |S| <= n");
    std::mt19937_64 rng(seed);
    WeightedGraph g(n);
    // Heavy path so edge mincuts are prefix-shaped; the first edge is
    // deliberately the lightest and vertex 0 keeps degree one, pinning the
    // global mincut at {0} across sizes and seeds.
    g.add_edge(0, 1, 16);
    for (int i = 1; i + 1 < n; ++i) g.add_edge(i, i + 1, uniform_cap(rng, 32, 64));
    const int chords = n / 3;
    for (int c = 0; c < chords; ++c) {
        Vertex u = 1 + static_cast<Vertex>(next_below(rng, n - 1));
        Vertex v = 1 + static_cast<Vertex>(next_below(rng, n - 1));
        if (u == v || g.find_edge(u, v)) continue;
        g.add_edge(u, v, uniform_cap(rng, 1, 2));
    }
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[next_below(rng, i + 1)]);
    for (int i = 0; i < steiner_count; ++i) g.mark_steiner(order[i]);
    return g;
}

MatrixInstance random_matrix(int n, Capacity max_entry, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    if (max_entry < 1) throw std::invalid_argument("max entry must be >= 1");
    std::mt19937_64 rng(seed);
    MatrixInstance mi;
    mi.m.assign(n / 2, std::vector<Capacity>((n + 1) / 2));
    for (auto& row : mi.m)
        for (auto& x : row) x = uniform_cap(rng, 1, max_entry);
    return mi;
}

std::vector<std::vector<int>> random_bipartite(int n, double density, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> b(n / 2, std::vector<int>((n + 1) / 2, 0));
    const std::uint64_t scale = 1u << 20;
    const auto threshold = static_cast<std::uint64_t>(density * scale);
    for (auto& row : b)
        for (auto& x : row) x = next_below(rng, scale) < threshold ? 1 : 0;
    return b;
}

} // namespace sentry
