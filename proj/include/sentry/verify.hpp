#pragma once

#include <string>
#include <vector>

#include "sentry/brute.hpp"
#include "sentry/oracle.hpp"

namespace sentry {

struct LemmaRecord {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::string first_counterexample; // empty while passing
};

struct PropertyReport {
    std::vector<LemmaRecord> records;
    bool all_pass() const {
        for (const auto& r : records)
            if (r.failures) return false;
        return true;
    }
    const LemmaRecord* find(const std::string& name) const {
        for (const auto& r : records)
            if (r.name == name) return &r;
        return nullptr;
    }
    void merge(const PropertyReport& other);
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::string dump_dir; // when nonempty, failing graphs are written here for replay
};

// Evaluates every module invariant against the enumeration oracle; n <= 14.
PropertyReport run_property_suite(const WeightedGraph& g, const VerifyOptions& opt = {});

// Same checks against caller-supplied (possibly tampered) oracles; the
// harness self-test corrupts one and expects the report to localize it.
PropertyReport run_property_suite(const WeightedGraph& g, const FullOracle& oracle,
                                  const BaselineOracle& baseline, const VerifyOptions& opt = {});

std::string format_report(const PropertyReport& report);
std::string report_to_json(const PropertyReport& report);

} // namespace sentry
