#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentry/oracle.hpp"

namespace sentry {

enum class SteinerRule { Global, SqrtGap, Two, Fixed };

struct BenchSpec {
    std::vector<int> sizes = {128, 256, 512, 1024};
    SteinerRule rule = SteinerRule::Global;
    int fixed_steiner = 2;  // used when rule == Fixed
    std::uint64_t seed = 7;
    int query_rounds = 128; // repetitions per timed query
    bool with_baseline = true;

    static BenchSpec parse(const std::string& family); // "n=...;s=...;seed=...;rounds=..."
    int steiner_count(int n) const;
};

struct CutSample {
    int emitted_size = 0;
    double ns = 0;
};

struct BenchRow {
    int n = 0;
    int steiner = 0;
    double build_ms = 0;
    SpaceReport words;
    std::size_t words_total = 0;
    std::size_t words_baseline = 0; // 0 when baseline skipped
    double cap_query_ns = 0;
    double cut_query_ns = 0;
    std::vector<CutSample> cut_samples;
};

BenchRow bench_instance(int n, int steiner_count, std::uint64_t seed, int query_rounds,
                        bool with_baseline);
std::vector<BenchRow> run_bench(const BenchSpec& spec);

// Whitespace table: n |S| build_ms words_stored words_baseline cap_ns cut_ns.
std::string format_bench_table(const std::vector<BenchRow>& rows);

// Least-squares fit r^2 of ns against emitted size.
double linear_fit_r2(const std::vector<CutSample>& samples);

} // namespace sentry
