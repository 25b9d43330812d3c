#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sentry/bench.hpp"
#include "sentry/generators.hpp"
#include "sentry/oracle.hpp"
#include "sentry/serialize.hpp"
#include "sentry/verify.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnknownEdge = 3;
constexpr int kExitDeltaRange = 4;

sentry::WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return sentry::WeightedGraph::parse(in);
}

sentry::FullOracle load_oracle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return sentry::read_oracle(in);
}

std::uint64_t env_seed(std::uint64_t fallback) {
    if (const char* s = std::getenv("STEINER_SENTRY_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

void emit_graph(const sentry::WeightedGraph& g, const std::string& out_path) {
    if (out_path.empty()) {
        g.write(std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        g.write(out);
    }
}

std::vector<std::vector<sentry::Capacity>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<sentry::Capacity>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<sentry::Capacity> row;
        sentry::Capacity x;
        while (ls >> x) row.push_back(x);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

int run(int argc, char** argv) {
    CLI::App app{"steiner-sentry: sensitivity oracles for Steiner mincuts"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "build an oracle from a graph file");
    std::string build_graph, build_out;
    build->add_option("-g,--graph", build_graph, "input graph file")->required();
    build->add_option("-o,--out", build_out, "oracle output file")->required();

    // cap / cut
    std::string q_oracle;
    int q_u = 0, q_v = 0;
    sentry::Capacity q_delta = 0;
    auto add_query_opts = [&](CLI::App* cmd) {
        cmd->add_option("-o,--oracle", q_oracle, "oracle file")->required();
        cmd->add_option("-u", q_u, "edge endpoint u")->required();
        cmd->add_option("-v", q_v, "edge endpoint v")->required();
        cmd->add_option("-d,--delta", q_delta, "capacity reduction")->required();
    };
    auto* cap = app.add_subcommand("cap", "post-failure Steiner mincut capacity");
    add_query_opts(cap);
    auto* cut = app.add_subcommand("cut", "post-failure Steiner mincut");
    add_query_opts(cut);

    // verify
    auto* verify = app.add_subcommand("verify", "run the lemma suite against brute force");
    std::string verify_graph, verify_json, verify_dump;
    std::uint64_t verify_seed = env_seed(1);
    int verify_count = 0;
    verify->add_option("-g,--graph", verify_graph, "graph file to verify");
    verify->add_option("--seed", verify_seed, "seed for sampled checks and random graphs");
    verify->add_option("--count", verify_count, "additionally verify K seeded random graphs");
    verify->add_option("--json", verify_json, "write machine-readable summary here");
    verify->add_option("--dump", verify_dump, "write failing graphs into this directory");

    // gen
    auto* gen = app.add_subcommand("gen", "generate adversarial and random fixtures");
    gen->require_subcommand(1);
    gen->fallthrough();
    std::string gen_out;
    gen->add_option("-o,--out", gen_out, "output graph file (default stdout)");

    auto* gm = gen->add_subcommand("matrix", "capacity lower-bound graph G(M)");
    std::string gm_file;
    int gm_n = 0, gm_steiner = 2;
    sentry::Capacity gm_max = 0;
    std::uint64_t gm_seed = env_seed(1);
    gm->add_option("--file", gm_file, "matrix rows, whitespace separated");
    gm->add_option("--random-n", gm_n, "generate a random matrix for n vertices");
    gm->add_option("--max-entry", gm_max, "max random entry (default n^2)");
    gm->add_option("--steiner", gm_steiner, "steiner count")->capture_default_str();
    gm->add_option("--seed", gm_seed, "random matrix seed");

    auto* gb = gen->add_subcommand("bipartite", "change-detection lower-bound graph G(B)");
    std::string gb_file;
    int gb_n = 0, gb_sl = 1, gb_sr = 1;
    double gb_density = 0.5;
    std::uint64_t gb_seed = env_seed(1);
    gb->add_option("--file", gb_file, "0/1 adjacency rows");
    gb->add_option("--random-n", gb_n, "generate a random bipartite instance for n vertices");
    gb->add_option("--density", gb_density, "edge probability")->capture_default_str();
    gb->add_option("--steiner-left", gb_sl, "steiner vertices on the left")->capture_default_str();
    gb->add_option("--steiner-right", gb_sr, "steiner vertices on the right")->capture_default_str();
    gb->add_option("--seed", gb_seed, "random instance seed");

    auto* gs = gen->add_subcommand("gsh", "cut-reporting lower-bound graph G_s(H)");
    std::string gs_graph;
    int gs_attach = -1;
    gs->add_option("--graph", gs_graph, "base graph H")->required();
    gs->add_option("--attach", gs_attach, "Steiner attachment vertex (-1 = lowest)");

    auto* gr = gen->add_subcommand("random", "seeded connected random graph");
    int gr_n = 8, gr_steiner_count = 0;
    double gr_density = 0.5, gr_fraction = 0.5;
    sentry::Capacity gr_wmin = 1, gr_wmax = 10;
    std::uint64_t gr_seed = env_seed(1);
    gr->add_option("--n", gr_n, "vertices")->capture_default_str();
    gr->add_option("--density", gr_density, "extra-edge probability")->capture_default_str();
    gr->add_option("--wmin", gr_wmin, "min weight")->capture_default_str();
    gr->add_option("--wmax", gr_wmax, "max weight")->capture_default_str();
    gr->add_option("--steiner-fraction", gr_fraction, "fraction of vertices in S")->capture_default_str();
    gr->add_option("--steiner-count", gr_steiner_count, "exact |S| (overrides fraction)");
    gr->add_option("--seed", gr_seed, "seed");

    // bench
    auto* bench = app.add_subcommand("bench", "space/time scaling table");
    std::string bench_family = "n=128,256,512,1024;s=global;seed=7;rounds=128";
    bench->add_option("--family", bench_family, "family spec, e.g. n=128,256;s=sqrt;seed=7")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (*build) {
        auto g = load_graph(build_graph);
        auto oracle = sentry::build_full_oracle(g);
        std::ofstream out(build_out);
        if (!out) throw std::runtime_error("cannot open " + build_out);
        sentry::write_oracle(out, oracle);
        auto sr = sentry::space_report(oracle);
        std::cout << "lambda=" << oracle.lambda << '\n'
                  << "words_type1=" << sr.words_type1 << '\n'
                  << "words_gh=" << sr.words_gh << '\n'
                  << "words_type3=" << sr.words_type3 << '\n'
                  << "words_captree=" << sr.words_captree << '\n'
                  << "words_total=" << sr.total() << '\n';
        return 0;
    }

    if (*cap || *cut) {
        auto oracle = load_oracle(q_oracle);
        if (*cap) {
            auto a = sentry::cap_query(oracle, q_u, q_v, q_delta);
            std::cout << a.capacity << ' ' << (a.changed ? "changed" : "unchanged") << '\n';
        } else {
            auto a = sentry::cut_query(oracle, q_u, q_v, q_delta);
            std::cout << a.capacity << ' ' << (a.changed ? "changed" : "unchanged") << '\n'
                      << sentry::format_cut(a.side, a.capacity) << '\n';
        }
        return 0;
    }

    if (*verify) {
        if (verify_graph.empty() && verify_count <= 0)
            throw std::runtime_error("verify: need -g and/or --count");
        sentry::PropertyReport total;
        sentry::VerifyOptions opt;
        opt.seed = verify_seed;
        opt.dump_dir = verify_dump;
        if (!verify_graph.empty()) total.merge(sentry::run_property_suite(load_graph(verify_graph), opt));
        for (int i = 0; i < verify_count; ++i) {
            std::uint64_t s = verify_seed + i;
            int n = 4 + static_cast<int>(s % 9);
            int mode = static_cast<int>(s % 3);
            int steiner = mode == 0 ? 2 : mode == 1 ? (n + 1) / 2 : n;
            auto g = sentry::gen_random_k(n, 0.5, 1, 10, steiner, s);
            total.merge(sentry::run_property_suite(g, opt));
        }
        std::cout << sentry::format_report(total);
        if (!verify_json.empty()) {
            std::ofstream out(verify_json);
            if (!out) throw std::runtime_error("cannot open " + verify_json);
            out << sentry::report_to_json(total) << '\n';
        }
        return total.all_pass() ? 0 : 1;
    }

    if (*gen) {
        if (*gm) {
            sentry::MatrixInstance mi;
            if (!gm_file.empty()) {
                mi.m = read_rows(gm_file);
            } else if (gm_n >= 2) {
                mi = sentry::random_matrix(gm_n, gm_max > 0 ? gm_max : static_cast<sentry::Capacity>(gm_n) * gm_n,
                                           gm_seed);
            } else {
                throw std::runtime_error("gen matrix: need --file or --random-n");
            }
            emit_graph(sentry::gen_capacity_lb(mi, gm_steiner), gen_out);
        } else if (*gb) {
            std::vector<std::vector<int>> adj;
            if (!gb_file.empty()) {
                for (auto& row : read_rows(gb_file)) {
                    adj.emplace_back();
                    for (auto x : row) adj.back().push_back(static_cast<int>(x));
                }
            } else if (gb_n >= 2) {
                adj = sentry::random_bipartite(gb_n, gb_density, gb_seed);
            } else {
                throw std::runtime_error("gen bipartite: need --file or --random-n");
            }
            emit_graph(sentry::gen_bipartite_lb(adj, gb_sl, gb_sr), gen_out);
        } else if (*gs) {
            auto h = load_graph(gs_graph);
            auto [g, params] = sentry::gen_reporting_lb(h, gs_attach);
            std::cerr << "lambda=" << params.lambda << " alpha=" << params.alpha
                      << " lambda_prime=" << params.lambda_prime << " s=" << params.s
                      << (params.doubled ? " (capacities doubled)" : "") << '\n';
            emit_graph(g, gen_out);
        } else if (*gr) {
            sentry::WeightedGraph g =
                gr_steiner_count > 0
                    ? sentry::gen_random_k(gr_n, gr_density, gr_wmin, gr_wmax, gr_steiner_count, gr_seed)
                    : sentry::gen_random(gr_n, gr_density, gr_wmin, gr_wmax, gr_fraction, gr_seed);
            emit_graph(g, gen_out);
        }
        return 0;
    }

    if (*bench) {
        auto spec = sentry::BenchSpec::parse(bench_family);
        if (const char* s = std::getenv("STEINER_SENTRY_SEED")) spec.seed = std::strtoull(s, nullptr, 10);
        auto rows = sentry::run_bench(spec);
        std::cout << sentry::format_bench_table(rows);
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sentry::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const sentry::QueryError& e) {
        switch (e.kind) {
            case sentry::QueryError::Kind::UnknownEdge:
                std::cerr << "unknown edge: " << e.what() << '\n';
                return kExitUnknownEdge;
            case sentry::QueryError::Kind::DeltaOutOfRange:
                std::cerr << "delta out of range: " << e.what() << '\n';
                return kExitDeltaRange;
            default:
                std::cerr << "query error: " << e.what() << '\n';
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
