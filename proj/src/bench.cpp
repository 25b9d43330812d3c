#include "sentry/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sentry/generators.hpp"

namespace sentry {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

volatile std::int64_t g_sink = 0; // defeats dead-code elimination around timed queries

} // namespace

int BenchSpec::steiner_count(int n) const {
    switch (rule) {
        case SteinerRule::Global: return n;
        case SteinerRule::SqrtGap: {
            int r = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
            return n - r + 1;
        }
        case SteinerRule::Two: return 2;
        case SteinerRule::Fixed: return fixed_steiner;
    }
    return n;
}

BenchSpec BenchSpec::parse(const std::string& family) {
    BenchSpec spec;
    std::stringstream ss(family);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad family item: " + item);
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "n") {
            spec.sizes.clear();
            std::stringstream ns(val);
            std::string tok;
            while (std::getline(ns, tok, ',')) spec.sizes.push_back(std::stoi(tok));
            if (spec.sizes.empty()) throw std::invalid_argument("family needs at least one n");
        } else if (key == "s") {
            if (val == "global") {
                spec.rule = SteinerRule::Global;
            } else if (val == "sqrt") {
                spec.rule = SteinerRule::SqrtGap;
            } else if (val == "two") {
                spec.rule = SteinerRule::Two;
            } else {
                spec.rule = SteinerRule::Fixed;
                spec.fixed_steiner = std::stoi(val);
            }
        } else if (key == "seed") {
            spec.seed = std::stoull(val);
        } else if (key == "rounds") {
            spec.query_rounds = std::stoi(val);
        } else if (key == "baseline") {
            spec.with_baseline = val == "1" || val == "true";
        } else {
            throw std::invalid_argument("unknown family key: " + key);
        }
    }
    return spec;
}

BenchRow bench_instance(int n, int steiner_count, std::uint64_t seed, int query_rounds,
                        bool with_baseline) {
    WeightedGraph g = bench_family_graph(n, steiner_count, seed);

    BenchRow row;
    row.n = n;
    row.steiner = steiner_count;

    auto start = Clock::now();
    FullOracle oracle = build_full_oracle(g);
    row.build_ms = ms_since(start);
    row.words = space_report(oracle);
    row.words_total = row.words.total();

    if (with_baseline) {
        BaselineOracle baseline = build_baseline_oracle(g);
        row.words_baseline = baseline_words(baseline);
    }

    // Query sampling: every k-th edge with delta = w(e), which exercises the
    // changed path on vital edges and the unchanged path elsewhere.
    std::vector<int> sample;
    const int stride = std::max(1, g.edge_count() / 256);
    for (int i = 0; i < g.edge_count(); i += stride) sample.push_back(i);

    double cap_total_ns = 0;
    long long cap_count = 0;
    for (int eid : sample) {
        const auto& e = g.edge(eid);
        auto t0 = Clock::now();
        for (int r = 0; r < query_rounds; ++r) {
            CapAnswer a = cap_query(oracle, e.u, e.v, e.w);
            g_sink = g_sink + a.capacity;
        }
        double ns = std::chrono::duration<double, std::nano>(Clock::now() - t0).count();
        cap_total_ns += ns / query_rounds;
        ++cap_count;
    }
    row.cap_query_ns = cap_total_ns / std::max(1ll, cap_count);

    std::vector<Vertex> buffer;
    buffer.reserve(g.vertex_count());
    double cut_total_ns = 0;
    for (int eid : sample) {
        const auto& e = g.edge(eid);
        auto t0 = Clock::now();
        int emitted = 0;
        for (int r = 0; r < query_rounds; ++r) {
            cut_query_into(oracle, e.u, e.v, e.w, buffer);
            emitted = static_cast<int>(buffer.size());
            g_sink = g_sink + emitted + (buffer.empty() ? 0 : buffer.back());
        }
        double ns = std::chrono::duration<double, std::nano>(Clock::now() - t0).count() / query_rounds;
        cut_total_ns += ns;
        row.cut_samples.push_back({emitted, ns});
    }
    row.cut_query_ns = row.cut_samples.empty() ? 0 : cut_total_ns / row.cut_samples.size();
    return row;
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
    std::vector<BenchRow> rows;
    for (int n : spec.sizes)
        rows.push_back(bench_instance(n, spec.steiner_count(n), spec.seed + n, spec.query_rounds,
                                      spec.with_baseline));
    return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "n steiner build_ms words_stored words_baseline cap_query_ns cut_query_ns\n";
    for (const auto& r : rows)
        os << r.n << ' ' << r.steiner << ' ' << r.build_ms << ' ' << r.words_total << ' '
           << r.words_baseline << ' ' << r.cap_query_ns << ' ' << r.cut_query_ns << '\n';
    return os.str();
}

double linear_fit_r2(const std::vector<CutSample>& samples) {
    const std::size_t k = samples.size();
    if (k < 3) return 0;
    double sx = 0, sy = 0;
    for (const auto& s : samples) {
        sx += s.emitted_size;
        sy += s.ns;
    }
    double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& s : samples) {
        double dx = s.emitted_size - mx, dy = s.ns - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) return 0;
    double slope = sxy / sxx;
    double ss_res = 0;
    for (const auto& s : samples) {
        double pred = my + slope * (s.emitted_size - mx);
        double d = s.ns - pred;
        ss_res += d * d;
    }
    return 1.0 - ss_res / syy;
}

} // namespace sentry
