#include "sentry/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "sentry/maxflow.hpp"

#include <json.hpp>

namespace sentry {

void PropertyReport::merge(const PropertyReport& other) {
    for (const auto& r : other.records) {
        bool found = false;
        for (auto& mine : records) {
            if (mine.name == r.name) {
                mine.checked += r.checked;
                mine.failures += r.failures;
                if (mine.first_counterexample.empty()) mine.first_counterexample = r.first_counterexample;
                found = true;
                break;
            }
        }
        if (!found) records.push_back(r);
    }
}

namespace {

class Checker {
public:
    Checker(const WeightedGraph& g, const FullOracle& oracle, const BaselineOracle& baseline,
            const VerifyOptions& opt)
        : g_(g), oracle_(oracle), baseline_(baseline), opt_(opt), brute_(brute_steiner_mincut(g)) {}

    PropertyReport run();

private:
    LemmaRecord& record(const std::string& name) {
        for (auto& r : report_.records)
            if (r.name == name) return r;
        report_.records.push_back({name, 0, 0, {}});
        return report_.records.back();
    }

    void tally(const std::string& name, bool ok, const std::string& detail) {
        LemmaRecord& r = record(name);
        ++r.checked;
        if (!ok) {
            ++r.failures;
            if (r.first_counterexample.empty()) {
                r.first_counterexample = detail;
                dump(name);
            }
        }
    }

    void dump(const std::string& name) {
        if (opt_.dump_dir.empty()) return;
        std::filesystem::create_directories(opt_.dump_dir);
        std::ofstream out(opt_.dump_dir + "/counterexample_" + name + ".graph");
        g_.write(out);
    }

    // Capacity with c(empty) = c(V) = 0, as the submodular inequalities need.
    Capacity cap_or_zero(const VertexSet& s) const {
        if (!s.is_proper_nonempty()) return 0;
        return cut_capacity(g_, s);
    }

    VertexSet set_from_mask(std::uint32_t mask) const {
        VertexSet s(g_.vertex_count());
        for (int v = 0; v < g_.vertex_count(); ++v)
            if ((mask >> v) & 1) s.insert(v);
        return s;
    }

    bool is_mincut_for(const VertexSet& side, Vertex x, Vertex y, Capacity cap_target) const {
        if (!side.is_proper_nonempty()) return false;
        if (side.contains(x) == side.contains(y)) return false;
        if (!is_steiner_cut(g_, side)) return false;
        return cut_capacity(g_, side) == cap_target;
    }

    std::vector<Capacity> delta_samples(Capacity w, std::mt19937_64& rng) const {
        std::vector<Capacity> ds = {0};
        if (w > 0) {
            ds.push_back(1);
            ds.push_back((w + 1) / 2);
            ds.push_back(w);
            ds.push_back(static_cast<Capacity>(rng() % static_cast<std::uint64_t>(w + 1)));
        }
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return ds;
    }

    void check_cut_arithmetic();
    void check_submodularity();
    void check_classification();
    void check_mincut_engine();
    void check_edge_mincuts();
    void check_type3_lemmas();
    void check_gomory_hu();
    void check_cap_tree();
    void check_queries();

    const WeightedGraph& g_;
    const FullOracle& oracle_;
    const BaselineOracle& baseline_;
    VerifyOptions opt_;
    BruteForceAnswer brute_;
    PropertyReport report_;
};

void Checker::check_cut_arithmetic() {
    const int n = g_.vertex_count();
    std::string none;
    for (std::uint32_t bits = 1; bits < (1u << (n - 1)); ++bits) {
        VertexSet side = set_from_mask(bits << 1);
        Capacity a = cut_capacity(g_, side);
        Capacity b = cut_capacity(g_, side.complement());
        if (a != b) {
            tally("cut-arithmetic", false, "asymmetric capacity for mask " + std::to_string(bits));
            return;
        }
    }
    tally("cut-arithmetic", true, none);
}

void Checker::check_submodularity() {
    std::mt19937_64 rng(opt_.seed ^ 0x55ull);
    const int n = g_.vertex_count();
    for (int it = 0; it < 200; ++it) {
        std::uint32_t am = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
        std::uint32_t bm = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
        VertexSet a = set_from_mask(am), b = set_from_mask(bm);
        Capacity ca = cap_or_zero(a), cb = cap_or_zero(b);
        bool ok = ca + cb >= cap_or_zero(a & b) + cap_or_zero(a | b) &&
                  ca + cb >= cap_or_zero(a.minus(b)) + cap_or_zero(b.minus(a));
        tally("submodularity", ok,
              ok ? "" : "masks " + std::to_string(am) + "," + std::to_string(bm));
        if (!ok) return;
    }
}

void Checker::check_classification() {
    for (const auto& e : g_.edges()) {
        EdgeType t = classify_edge(g_, e.u, e.v);
        bool su = g_.is_steiner(e.u), sv = g_.is_steiner(e.v);
        bool ok = false;
        switch (t.kind) {
            case EdgeKind::Type1: ok = !su && !sv; break;
            case EdgeKind::Type2: ok = su && sv; break;
            case EdgeKind::Type3:
                ok = (su != sv) && g_.is_steiner(t.steiner_end) && !g_.is_steiner(t.nonsteiner_end);
                break;
        }
        tally("classify-partition", ok,
              ok ? "" : "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
}

void Checker::check_mincut_engine() {
    const int n = g_.vertex_count();
    MaxFlow mf(g_);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            auto r = mf.solve({u}, {v});
            // Exhaustive minimum over source sides containing u, excluding v.
            Capacity best = g_.total_capacity() + 1;
            bool found_smaller_side = false;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (!((mask >> u) & 1) || ((mask >> v) & 1)) continue;
                VertexSet side = set_from_mask(mask);
                if (!side.is_proper_nonempty()) continue;
                Capacity c = cut_capacity(g_, side);
                best = std::min(best, c);
            }
            bool ok = r.capacity == best && cut_capacity(g_, r.side) == r.capacity &&
                      r.side.contains(u) && !r.side.contains(v);
            // Minimal side: subset of every minimum source side.
            if (ok) {
                for (std::uint32_t mask = 0; mask < (1u << n) && !found_smaller_side; ++mask) {
                    if (!((mask >> u) & 1) || ((mask >> v) & 1)) continue;
                    VertexSet side = set_from_mask(mask);
                    if (!side.is_proper_nonempty()) continue;
                    if (cut_capacity(g_, side) != best) continue;
                    if (!r.side.is_subset_of(side)) found_smaller_side = true;
                }
                ok = !found_smaller_side;
            }
            tally("mincut-engine", ok,
                  ok ? "" : "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
            if (!ok) return;
        }
}

void Checker::check_edge_mincuts() {
    for (int i = 0; i < g_.edge_count(); ++i) {
        const auto& e = g_.edge(i);
        EdgeMincut mc = mincut_for_edge(g_, e.u, e.v, brute_.lambda);
        bool ok = mc.capacity == brute_.edge_mincut_cap[i] &&
                  is_mincut_for(mc.cut.side, e.u, e.v, mc.capacity) && mc.cut.side.contains(e.u) &&
                  mc.vital == (brute_.vital[i] != 0);
        tally("edge-mincut-vs-brute", ok,
              ok ? "" : "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
}

void Checker::check_type3_lemmas() {
    // Group vital Type-3 edges by their nonSteiner endpoint.
    std::vector<std::vector<int>> by_owner(g_.vertex_count());
    for (int i = 0; i < g_.edge_count(); ++i) {
        const auto& e = g_.edge(i);
        EdgeType t = classify_edge(g_, e.u, e.v);
        if (t.kind == EdgeKind::Type3 && brute_.vital[i]) by_owner[t.nonsteiner_end].push_back(i);
    }

    for (Vertex u = 0; u < g_.vertex_count(); ++u) {
        const auto& vit = by_owner[u];
        if (vit.empty()) continue;

        struct Entry {
            Vertex x;
            VertexSet nearest;
            std::vector<VertexSet> all_mincuts; // oriented to contain x
        };
        std::vector<Entry> entries;
        for (int eid : vit) {
            EdgeType t = classify_edge(g_, g_.edge(eid).u, g_.edge(eid).v);
            Entry en{t.steiner_end, {}, brute_mincuts_for_edge(g_, t.steiner_end, u)};

            // Uniqueness: exactly one inclusion-minimal mincut containing x.
            int minimal_count = 0;
            std::size_t minimal_at = 0;
            for (std::size_t a = 0; a < en.all_mincuts.size(); ++a) {
                bool minimal = true;
                for (std::size_t b = 0; b < en.all_mincuts.size() && minimal; ++b)
                    if (a != b && en.all_mincuts[b].is_subset_of(en.all_mincuts[a])) minimal = false;
                if (minimal) {
                    ++minimal_count;
                    minimal_at = a;
                }
            }
            bool unique_ok = minimal_count == 1;
            if (unique_ok) {
                en.nearest = en.all_mincuts[minimal_at];
                NearestMincut nm = nearest_mincut(g_, en.x, u);
                unique_ok = nm.cut.side == en.nearest;
            }
            tally("uniqueness-property", unique_ok,
                  unique_ok ? "" : "edge (" + std::to_string(en.x) + "," + std::to_string(u) + ")");
            if (!unique_ok) continue;
            entries.push_back(std::move(en));
        }

        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = 0; j < entries.size(); ++j) {
                if (i == j) continue;
                const Entry& a = entries[i];
                const Entry& b = entries[j];
                if (i < j) {
                    bool lhs = !a.nearest.contains(b.x) && !b.nearest.contains(a.x);
                    bool rhs = !a.nearest.intersects(b.nearest);
                    tally("disjoint-property", lhs == rhs,
                          lhs == rhs ? ""
                                     : "edges (" + std::to_string(a.x) + "," + std::to_string(u) +
                                           ") / (" + std::to_string(b.x) + "," + std::to_string(u) + ")");
                }
                // Subset property, ordered: x_j in N(e_i) iff N(e_j) subseteq N(e_i).
                bool lhs = a.nearest.contains(b.x);
                bool rhs = b.nearest.is_subset_of(a.nearest);
                tally("subset-property", lhs == rhs,
                      lhs == rhs ? ""
                                 : "edges (" + std::to_string(a.x) + "," + std::to_string(u) +
                                       ") / (" + std::to_string(b.x) + "," + std::to_string(u) + ")");
                // Intersection property over all mincuts, not just nearest.
                Capacity cap_j = brute_.edge_mincut_cap[*g_.find_edge(b.x, u)];
                for (const auto& c1 : a.all_mincuts)
                    for (const auto& c2 : b.all_mincuts) {
                        VertexSet meet = c1 & c2;
                        bool in = c1.contains(b.x);
                        bool mincut = !meet.empty() && meet.is_proper_nonempty() &&
                                      is_mincut_for(meet, b.x, u, cap_j) && meet.contains(b.x);
                        tally("intersection-property", in == mincut,
                              in == mincut ? ""
                                           : "edges (" + std::to_string(a.x) + "," +
                                                 std::to_string(u) + ") / (" + std::to_string(b.x) +
                                                 "," + std::to_string(u) + ")");
                    }
            }
    }
    // Make the records exist even when the graph has no vital Type-3 edges.
    record("uniqueness-property");
    record("disjoint-property");
    record("subset-property");
    record("intersection-property");
}

void Checker::check_gomory_hu() {
    const int n = g_.vertex_count();
    MaxFlow mf(g_);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            Capacity direct = mf.solve({u}, {v}).capacity;
            auto [cap, cut] = oracle_.gh.query(u, v);
            bool ok = cap == direct && cut.side.contains(u) && !cut.side.contains(v) &&
                      cut_capacity(g_, cut.side) == cap;
            tally("gh-validity", ok,
                  ok ? "" : "pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    for (int i = 0; i < g_.edge_count(); ++i) {
        const auto& e = g_.edge(i);
        if (classify_edge(g_, e.u, e.v).kind != EdgeKind::Type2) continue;
        auto [cap, cut] = oracle_.gh.query(e.u, e.v);
        bool ok = cap == brute_.edge_mincut_cap[i] && is_mincut_for(cut.side, e.u, e.v, cap);
        tally("gh-type2-mincut", ok,
              ok ? "" : "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    record("gh-validity");
    record("gh-type2-mincut");
}

void Checker::check_cap_tree() {
    const CapTree& t = oracle_.cap_tree;
    for (int i = 0; i < g_.edge_count(); ++i) {
        const auto& e = g_.edge(i);
        Capacity at_lca = t.node(t.lca(e.u, e.v)).cap;
        bool ok = at_lca == brute_.edge_mincut_cap[i];
        tally("captree-lca", ok,
              ok ? "" : "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    // Full binary shape and linear size.
    bool shape = true;
    for (int i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(i);
        if ((nd.left >= 0) != (nd.right >= 0)) shape = false;
    }
    shape = shape && t.node_count() == 2 * t.leaf_count() - 1 &&
            t.leaf_count() <= g_.vertex_count();
    tally("captree-structure", shape, shape ? "" : "node/leaf counts off");
}

void Checker::check_queries() {
    std::mt19937_64 rng(opt_.seed ^ 0x9e3779b97f4a7c15ull);
    for (int i = 0; i < g_.edge_count(); ++i) {
        const auto& e = g_.edge(i);
        Capacity prev = std::numeric_limits<Capacity>::max();
        for (Capacity d : delta_samples(e.w, rng)) {
            Capacity expect = brute_.cap_after(g_, i, d);
            CapAnswer ca = cap_query(oracle_, e.u, e.v, d);
            bool cap_ok = ca.capacity == expect && ca.changed == (expect < brute_.lambda) &&
                          ca.capacity <= prev && (d != 0 || ca.capacity == brute_.lambda);
            prev = ca.capacity;
            tally("cap-query-equivalence", cap_ok,
                  cap_ok ? ""
                         : "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") delta " + std::to_string(d));

            CutAnswer cu = cut_query(oracle_, e.u, e.v, d);
            VertexSet side(g_.vertex_count());
            for (Vertex x : cu.side) side.insert(x);
            Capacity modified = side.is_proper_nonempty()
                                    ? cut_capacity(g_, side) -
                                          (side.contains(e.u) != side.contains(e.v) ? d : 0)
                                    : -1;
            bool cut_ok = side.is_proper_nonempty() && is_steiner_cut(g_, side) &&
                          modified == expect && cu.capacity == ca.capacity;
            tally("cut-query-equivalence", cut_ok,
                  cut_ok ? ""
                         : "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") delta " + std::to_string(d));

            CutAnswer ba = baseline_cut_query(baseline_, e.u, e.v, d);
            VertexSet bside(g_.vertex_count());
            for (Vertex x : ba.side) bside.insert(x);
            Capacity bmod = bside.is_proper_nonempty()
                                ? cut_capacity(g_, bside) -
                                      (bside.contains(e.u) != bside.contains(e.v) ? d : 0)
                                : -1;
            bool base_ok = ba.capacity == cu.capacity && bside.is_proper_nonempty() &&
                           is_steiner_cut(g_, bside) && bmod == expect;
            tally("baseline-parity", base_ok,
                  base_ok ? ""
                          : "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") delta " + std::to_string(d));
        }
    }

    // Laminar forest reproduces each stored nearest mincut (checked against
    // brute force through uniqueness-property; here: emission round-trip).
    for (std::size_t i = 0; i < oracle_.type3.owners.size(); ++i) {
        const LaminarTree& tree = oracle_.type3.trees[i];
        bool ok = tree.node_count() <= 2 * tree.member_count() + 1;
        tally("laminar-structure", ok, ok ? "" : "node count bound");
    }
    record("laminar-structure");
}

PropertyReport Checker::run() {
    check_cut_arithmetic();
    check_submodularity();
    check_classification();
    check_mincut_engine();
    check_edge_mincuts();
    check_type3_lemmas();
    check_gomory_hu();
    check_cap_tree();
    check_queries();
    return std::move(report_);
}

} // namespace

PropertyReport run_property_suite(const WeightedGraph& g, const FullOracle& oracle,
                                  const BaselineOracle& baseline, const VerifyOptions& opt) {
    if (g.vertex_count() > 14) throw std::invalid_argument("property suite limited to n <= 14");
    Checker c(g, oracle, baseline, opt);
    return c.run();
}

PropertyReport run_property_suite(const WeightedGraph& g, const VerifyOptions& opt) {
    FullOracle oracle = build_full_oracle(g);
    BaselineOracle baseline = build_baseline_oracle(g);
    return run_property_suite(g, oracle, baseline, opt);
}

std::string format_report(const PropertyReport& report) {
    std::ostringstream os;
    for (const auto& r : report.records) {
        os << (r.failures ? "FAIL" : "ok  ") << ' ' << r.name << " checked=" << r.checked
           << " failures=" << r.failures;
        if (r.failures) os << " first: " << r.first_counterexample;
        os << '\n';
    }
    return os.str();
}

std::string report_to_json(const PropertyReport& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json rec;
        rec["lemma"] = r.name;
        rec["checked"] = r.checked;
        rec["failures"] = r.failures;
        if (r.failures) rec["counterexample"] = r.first_counterexample;
        out.push_back(rec);
    }
    return out.dump(2);
}

} // namespace sentry
