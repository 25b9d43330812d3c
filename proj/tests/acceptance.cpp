// Acceptance harness: runs every gate and prints one PASS/FAIL line per
// criterion. Exit code is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sentry/bench.hpp"
#include "sentry/brute.hpp"
#include "sentry/generators.hpp"
#include "sentry/oracle.hpp"
#include "sentry/verify.hpp"

using namespace sentry;
using Clock = std::chrono::steady_clock;

namespace {

int failed_criteria = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("CRITERION %d [%s]: %s  (%s)\n", criterion, name.c_str(),
                pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failed_criteria;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CorpusGraph {
    WeightedGraph g;
    std::uint64_t seed;
};

// 200 seeded random graphs, n in [4,12], |S| cycling {2, ceil(n/2), n},
// density and weight floor varied; a fifth of them carry zero-weight edges.
std::vector<CorpusGraph> make_corpus() {
    std::vector<CorpusGraph> corpus;
    const double densities[4] = {0.3, 0.5, 0.8, 1.0};
    for (int i = 0; i < 200; ++i) {
        std::uint64_t seed = 1000 + i;
        int n = 4 + (i % 9);
        int mode = i % 3;
        int steiner = mode == 0 ? 2 : mode == 1 ? (n + 1) / 2 : n;
        double density = densities[(i / 3) % 4];
        Capacity wlo = (i % 5 == 0) ? 0 : 1;
        corpus.push_back({gen_random_k(n, density, wlo, 10, steiner, seed), seed});
    }
    return corpus;
}

long long record_failures(const PropertyReport& report, std::initializer_list<const char*> names,
                          long long& checked) {
    long long failures = 0;
    for (const char* name : names) {
        const auto* rec = report.find(name);
        if (!rec) {
            ++failures; // a missing record means the check never ran
            continue;
        }
        checked += rec->checked;
        failures += rec->failures;
    }
    return failures;
}

void run_corpus_criteria() {
    auto t0 = Clock::now();
    auto corpus = make_corpus();
    PropertyReport merged;
    VerifyOptions opt;
    for (const auto& item : corpus) {
        opt.seed = item.seed;
        merged.merge(run_property_suite(item.g, opt));
    }
    double elapsed = seconds_since(t0);

    {
        long long checked = 0;
        long long failures = record_failures(
            merged, {"cap-query-equivalence", "cut-query-equivalence"}, checked);
        std::ostringstream d;
        d << "200 graphs, " << checked << " queries, " << failures << " mismatches, "
          << elapsed << " s";
        report(1, "oracle equivalence", failures == 0 && elapsed < 300.0, d.str());
    }
    {
        long long checked = 0;
        long long failures =
            record_failures(merged,
                            {"disjoint-property", "intersection-property", "uniqueness-property",
                             "subset-property", "gh-type2-mincut"},
                            checked);
        std::ostringstream d;
        d << checked << " lemma instances, " << failures << " violations";
        report(2, "lemma suite", failures == 0, d.str());
    }
    {
        long long checked = 0;
        long long failures = record_failures(merged, {"gh-validity"}, checked);
        std::ostringstream d;
        d << checked << " vertex pairs, " << failures << " mismatches";
        report(3, "gomory-hu validity", failures == 0, d.str());
    }
    // Criterion 7 (parity half); the size half joins after the scaling runs.
    {
        long long checked = 0;
        long long failures = record_failures(merged, {"baseline-parity"}, checked);
        std::ostringstream d;
        d << checked << " paired queries, " << failures << " mismatches";
        report(7, "baseline parity", failures == 0, d.str());
    }
}

void run_generator_criteria() {
    long long checked = 0, failures = 0;
    std::ostringstream detail;

    // 20 matrix instances: post-failure capacity is lambda - M[i][j].
    for (int k = 0; k < 20; ++k) {
        int n = 2 + (k % 11);
        auto mi = random_matrix(n, static_cast<Capacity>(n) * n, 500 + k);
        int steiner = 2 + (k % (n - 1 > 0 ? n - 1 : 1));
        if (steiner > n) steiner = n;
        auto g = gen_capacity_lb(mi, steiner);
        auto oracle = build_full_oracle(g);
        auto brute = brute_steiner_mincut(g);
        Capacity sum = 0;
        for (const auto& row : mi.m)
            for (Capacity x : row) sum += x;
        if (oracle.lambda != sum || brute.lambda != sum) ++failures;
        for (int i = 0; i < mi.rows(); ++i)
            for (int j = 0; j < mi.cols(); ++j) {
                Vertex a = i, b = mi.rows() + j;
                ++checked;
                auto ans = cap_query(oracle, a, b, mi.m[i][j]);
                Capacity expect = oracle.lambda - mi.m[i][j];
                if (ans.capacity != expect) ++failures;
                if (brute.cap_after(g, *g.find_edge(a, b), mi.m[i][j]) != expect) ++failures;
            }
    }

    // 20 bipartite instances: changed flags reconstruct B exactly.
    for (int k = 0; k < 20; ++k) {
        int n = 4 + (k % 9);
        auto b = random_bipartite(n, 0.2 + 0.6 * (k % 4) / 3.0, 900 + k);
        auto g = gen_bipartite_lb(b, 1 + k % (n / 2), 1 + k % ((n + 1) / 2));
        auto oracle = build_full_oracle(g);
        int rows = n / 2, cols = (n + 1) / 2;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                Vertex u = i, v = rows + j;
                Capacity w = g.edge(*g.find_edge(u, v)).w;
                ++checked;
                auto ans = cap_query(oracle, u, v, w);
                if (ans.changed != (b[i][j] == 1)) ++failures;
            }
    }

    // 10 G_s(H) instances: C_m unique, and failing an edge of H moves the
    // reported mincut away from C_m exactly when the edge is vital in H.
    int built = 0;
    for (std::uint64_t seed = 300; built < 10 && seed < 400; ++seed) {
        int n = 4 + static_cast<int>(seed % 6);
        int steiner = 2 + static_cast<int>(seed % (n - 1));
        auto h = gen_random_k(n, 0.5, 1, 9, steiner, seed);
        auto h_brute = brute_steiner_mincut(h);
        bool any_vital = false;
        for (char v : h_brute.vital) any_vital |= v != 0;
        if (!any_vital) continue;
        ++built;
        auto [g, params] = gen_reporting_lb(h, -1);
        auto g_brute = brute_steiner_mincut(g);
        ++checked;
        bool unique_cm = g_brute.lambda == params.lambda_prime &&
                         g_brute.mincut_sides.size() == 1 &&
                         g_brute.mincut_sides[0].count() == 1 &&
                         g_brute.mincut_sides[0].contains(params.s);
        if (!unique_cm) ++failures;
        auto oracle = build_full_oracle(g);
        for (const auto& e : h.edges()) {
            Capacity w = g.edge(*g.find_edge(e.u, e.v)).w;
            ++checked;
            auto ans = cut_query(oracle, e.u, e.v, w);
            VertexSet side(g.vertex_count());
            for (Vertex v : ans.side) side.insert(v);
            VertexSet cm(g.vertex_count());
            cm.insert(params.s);
            bool is_cm = side == cm || side == cm.complement();
            bool vital_in_h = h_brute.vital[*h.find_edge(e.u, e.v)] != 0;
            if (is_cm != !vital_in_h) ++failures;
        }
    }
    if (built < 10) ++failures;

    detail << checked << " generator checks, " << failures << " violations, " << built
           << " G_s(H) instances";
    report(6, "generator lemmas", failures == 0, detail.str());
}

void run_scaling_criteria() {
    const std::vector<int> sizes = {128, 256, 512, 1024};
    struct Regime {
        const char* name;
        SteinerRule rule;
    };
    const Regime regimes[3] = {{"global", SteinerRule::Global},
                               {"sqrt", SteinerRule::SqrtGap},
                               {"two", SteinerRule::Two}};

    auto t0 = Clock::now();
    std::vector<std::vector<BenchRow>> rows(3);
    for (int r = 0; r < 3; ++r) {
        BenchSpec spec;
        spec.sizes = sizes;
        spec.rule = regimes[r].rule;
        spec.seed = 7;
        spec.query_rounds = 256;
        spec.with_baseline = true;
        rows[r] = run_bench(spec);
    }
    double build_elapsed = seconds_since(t0);

    // Criterion 4: fits anchored at n = 128.
    {
        bool pass = build_elapsed < 600.0;
        std::ostringstream d;
        double c_lin = static_cast<double>(rows[0][0].words_total) / 128.0;
        double c_sqrt = static_cast<double>(rows[1][0].words_total) / std::pow(128.0, 1.5);
        double c_quad = static_cast<double>(rows[2][0].words_total) / (128.0 * 128.0);
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            double n = sizes[i];
            if (rows[0][i].words_total > c_lin * n) pass = false;
            if (rows[1][i].words_total > 2.0 * c_sqrt * std::pow(n, 1.5)) pass = false;
            if (rows[2][i].words_total > 2.0 * c_quad * n * n) pass = false;
        }
        d << "c_lin=" << c_lin << " c_sqrt=" << c_sqrt << " c_quad=" << c_quad
          << "; words(1024): global=" << rows[0][3].words_total
          << " sqrt=" << rows[1][3].words_total << " two=" << rows[2][3].words_total
          << "; build total " << build_elapsed << " s";
        report(4, "space scaling", pass, d.str());
    }

    // Criterion 5: constant-time capacity queries, output-linear cut queries.
    {
        double cap_min = 1e18, cap_max = 0;
        std::vector<CutSample> samples;
        for (int r = 0; r < 3; ++r)
            for (const auto& row : rows[r]) {
                cap_min = std::min(cap_min, row.cap_query_ns);
                cap_max = std::max(cap_max, row.cap_query_ns);
                samples.insert(samples.end(), row.cut_samples.begin(), row.cut_samples.end());
            }
        double ratio = cap_max / cap_min;
        double r2 = linear_fit_r2(samples);
        std::ostringstream d;
        d << "cap ns ratio " << ratio << " (< 3), cut fit r2 " << r2 << " over "
          << samples.size() << " samples";
        report(5, "query-time shape", ratio < 3.0 && r2 >= 0.9, d.str());
    }

    // Criterion 7, size half: quadratic baseline strictly bigger on every
    // |S| >= 3 instance with n >= 256.
    {
        bool pass = true;
        std::ostringstream d;
        int compared = 0;
        for (int r = 0; r < 3; ++r)
            for (const auto& row : rows[r]) {
                if (row.n < 256 || row.steiner < 3) continue;
                ++compared;
                if (row.words_baseline <= row.words_total) {
                    pass = false;
                    d << "n=" << row.n << " |S|=" << row.steiner << " baseline "
                      << row.words_baseline << " <= " << row.words_total << "; ";
                }
            }
        d << compared << " instances compared";
        report(7, "baseline size dominance", pass, d.str());
    }
}

} // namespace

int main() {
    auto t0 = Clock::now();
    run_corpus_criteria();
    run_generator_criteria();
    run_scaling_criteria();
    std::printf("acceptance total: %.1f s, %d criteria failed\n", seconds_since(t0),
                failed_criteria);
    return failed_criteria;
}
