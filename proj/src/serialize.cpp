#include "sentry/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace sentry {

namespace {

constexpr const char* kMagic = "steiner-sentry-oracle 1";

void write_cap_tree(std::ostream& out, const char* tag, const CapTree& t, int n) {
    out << tag << ' ' << t.node_count() << '\n';
    for (int i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(i);
        out << "n " << nd.cap << ' ' << nd.left << ' ' << nd.right << ' ' << nd.selected_edge
            << '\n';
    }
    int leaf_entries = 0;
    for (Vertex v = 0; v < n; ++v)
        if (t.leaf_of(v) >= 0) ++leaf_entries;
    out << "leaves " << leaf_entries << '\n';
    for (Vertex v = 0; v < n; ++v)
        if (t.leaf_of(v) >= 0) out << "l " << v << ' ' << t.leaf_of(v) << '\n';
    if (t.augmented()) {
        out << "cuts\n";
        for (int i = 0; i < t.node_count(); ++i) {
            const auto& c = t.node_cut(i);
            out << "c " << i << ' ' << c.size();
            for (Vertex v : c) out << ' ' << v;
            out << '\n';
        }
    } else {
        out << "nocuts\n";
    }
}

std::string expect_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw OracleFormatError(std::string("truncated oracle: ") + what);
    return line;
}

} // namespace

void write_oracle(std::ostream& out, const FullOracle& o) {
    out << kMagic << '\n';
    out << "graph\n";
    o.graph.write(out);
    out << "lambda " << o.lambda << '\n';
    out << "basecut " << o.base_cut.size();
    for (Vertex v : o.base_cut) out << ' ' << v;
    out << '\n';
    write_cap_tree(out, "captree", o.cap_tree, o.graph.vertex_count());
    write_cap_tree(out, "type1", o.type1, o.graph.vertex_count());
    out << "gh\n";
    o.gh.write(out);
    out << "type3 " << o.type3.owners.size() << '\n';
    for (std::size_t i = 0; i < o.type3.owners.size(); ++i) {
        const LaminarTree& t = o.type3.trees[i];
        out << "forest " << o.type3.owners[i] << ' ' << t.node_count() << '\n';
        for (int nd = 1; nd < t.node_count(); ++nd) {
            const auto& m = t.members_at(nd);
            out << "f " << t.parent(nd) << ' ' << m.size();
            for (Vertex v : m) out << ' ' << v;
            out << '\n';
        }
    }
    out << "end\n";
}

namespace {

CapTree read_cap_tree(std::istream& in, const char* tag, const WeightedGraph& g,
                      const std::vector<int>& edge_ids, Capacity lambda) {
    std::istringstream hdr(expect_line(in, tag));
    std::string word;
    int count;
    if (!(hdr >> word >> count) || word != tag) throw OracleFormatError("expected section " + std::string(tag));
    std::vector<CapTree::Node> nodes(count);
    for (auto& nd : nodes) {
        std::istringstream ls(expect_line(in, "node"));
        std::string t;
        if (!(ls >> t >> nd.cap >> nd.left >> nd.right >> nd.selected_edge) || t != "n")
            throw OracleFormatError("bad node line");
    }
    std::istringstream lh(expect_line(in, "leaves"));
    int leaf_entries;
    if (!(lh >> word >> leaf_entries) || word != "leaves") throw OracleFormatError("expected leaves");
    std::vector<int> leaf_of(g.vertex_count(), -1);
    for (int i = 0; i < leaf_entries; ++i) {
        std::istringstream ls(expect_line(in, "leaf"));
        std::string t;
        int v, l;
        if (!(ls >> t >> v >> l) || t != "l" || v < 0 || v >= g.vertex_count())
            throw OracleFormatError("bad leaf line");
        leaf_of[v] = l;
    }
    std::string cuts_line = expect_line(in, "cuts");
    std::vector<std::vector<Vertex>> node_cuts;
    if (cuts_line == "cuts") {
        node_cuts.resize(count);
        for (int i = 0; i < count; ++i) {
            std::istringstream ls(expect_line(in, "cut"));
            std::string t;
            int id;
            std::size_t k;
            if (!(ls >> t >> id >> k) || t != "c" || id != i) throw OracleFormatError("bad cut line");
            node_cuts[i].resize(k);
            for (auto& v : node_cuts[i])
                if (!(ls >> v)) throw OracleFormatError("bad cut line");
        }
    } else if (cuts_line != "nocuts") {
        throw OracleFormatError("expected cuts/nocuts");
    }
    return CapTree::restore(std::move(nodes), std::move(leaf_of), std::move(node_cuts), lambda, g,
                            edge_ids);
}

} // namespace

FullOracle read_oracle(std::istream& in) {
    if (expect_line(in, "magic") != kMagic)
        throw OracleFormatError("not a steiner-sentry oracle or unsupported version");
    if (expect_line(in, "graph") != "graph") throw OracleFormatError("expected graph section");

    // The graph section is exactly the graph file format: header + s/e lines.
    std::ostringstream graph_text;
    std::string line;
    std::streampos after_graph;
    {
        std::string header = expect_line(in, "graph header");
        std::istringstream hs(header);
        std::string tag;
        long long n, m;
        if (!(hs >> tag >> n >> m) || tag != "p") throw OracleFormatError("bad graph header");
        graph_text << header << '\n';
        long long remaining_edges = m;
        while (remaining_edges > 0 || in.peek() == 's') {
            line = expect_line(in, "graph body");
            if (line.empty()) continue;
            if (line[0] == 'e') --remaining_edges;
            else if (line[0] != 's') throw OracleFormatError("bad graph body line");
            graph_text << line << '\n';
        }
    }
    std::istringstream graph_in(graph_text.str());
    FullOracle o;
    o.graph = WeightedGraph::parse(graph_in);

    {
        std::istringstream ls(expect_line(in, "lambda"));
        std::string tag;
        if (!(ls >> tag >> o.lambda) || tag != "lambda") throw OracleFormatError("expected lambda");
    }
    {
        std::istringstream ls(expect_line(in, "basecut"));
        std::string tag;
        std::size_t k;
        if (!(ls >> tag >> k) || tag != "basecut") throw OracleFormatError("expected basecut");
        o.base_cut.resize(k);
        for (auto& v : o.base_cut)
            if (!(ls >> v)) throw OracleFormatError("bad basecut");
    }

    std::vector<int> all_ids(o.graph.edge_count());
    for (int i = 0; i < o.graph.edge_count(); ++i) all_ids[i] = i;
    std::vector<int> t1_ids;
    for (int i = 0; i < o.graph.edge_count(); ++i) {
        const auto& e = o.graph.edge(i);
        if (classify_edge(o.graph, e.u, e.v).kind == EdgeKind::Type1) t1_ids.push_back(i);
    }

    o.cap_tree = read_cap_tree(in, "captree", o.graph, all_ids, o.lambda);
    o.type1 = read_cap_tree(in, "type1", o.graph, t1_ids, o.lambda);

    if (expect_line(in, "gh") != "gh") throw OracleFormatError("expected gh section");
    {
        std::ostringstream gh_text;
        for (int i = 0; i < o.graph.vertex_count() - 1; ++i) gh_text << expect_line(in, "gh edge") << '\n';
        std::istringstream gh_in(gh_text.str());
        o.gh = GomoryHuTree::read(gh_in, o.graph.vertex_count());
    }

    {
        std::istringstream ls(expect_line(in, "type3"));
        std::string tag;
        std::size_t count;
        if (!(ls >> tag >> count) || tag != "type3") throw OracleFormatError("expected type3");
        o.type3.tree_of.assign(o.graph.vertex_count(), -1);
        for (std::size_t i = 0; i < count; ++i) {
            std::istringstream fh(expect_line(in, "forest"));
            std::string t;
            Vertex owner;
            int nodes;
            if (!(fh >> t >> owner >> nodes) || t != "forest") throw OracleFormatError("bad forest line");
            std::vector<int> parent(nodes, -1);
            std::vector<std::vector<Vertex>> members(nodes);
            for (int nd = 1; nd < nodes; ++nd) {
                std::istringstream fl(expect_line(in, "forest node"));
                std::string ft;
                std::size_t k;
                if (!(fl >> ft >> parent[nd] >> k) || ft != "f") throw OracleFormatError("bad forest node");
                members[nd].resize(k);
                for (auto& v : members[nd])
                    if (!(fl >> v)) throw OracleFormatError("bad forest node");
            }
            o.type3.owners.push_back(owner);
            o.type3.tree_of[owner] = static_cast<int>(o.type3.trees.size());
            o.type3.trees.push_back(
                LaminarTree::restore(o.graph.vertex_count(), std::move(parent), std::move(members)));
        }
    }
    if (expect_line(in, "end") != "end") throw OracleFormatError("missing end marker");
    return o;
}

} // namespace sentry
