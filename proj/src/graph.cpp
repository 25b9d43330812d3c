#include "sentry/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace sentry {

int VertexSet::count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

void VertexSet::trim() {
    if (n_ % 64 != 0 && !bits_.empty())
        bits_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

VertexSet VertexSet::complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    r.trim();
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~o.bits_[i];
    return r;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & o.bits_[i]) return true;
    return false;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

namespace {

const char* parse_kind_name(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::Malformed: return "malformed line";
        case ParseError::Kind::DuplicateSteiner: return "duplicate steiner declaration";
        case ParseError::Kind::TooFewSteiner: return "steiner set too small";
        case ParseError::Kind::NegativeCapacity: return "negative capacity";
    }
    return "parse error";
}

} // namespace

ParseError::ParseError(Kind k, int l, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ": " + parse_kind_name(k) + ": " + msg),
      kind(k),
      line(l) {}

QueryError::QueryError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

WeightedGraph::WeightedGraph(int n) : n_(n), incident_(n), steiner_(n, 0) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

std::uint64_t WeightedGraph::key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

void WeightedGraph::add_edge(Vertex u, Vertex v, Capacity w) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (w < 0) throw std::invalid_argument("negative capacity");
    if (u > v) std::swap(u, v);
    auto it = edge_index_.find(key(u, v));
    if (it != edge_index_.end()) {
        edges_[it->second].w += w;
    } else {
        int id = static_cast<int>(edges_.size());
        edges_.push_back({u, v, w});
        edge_index_.emplace(key(u, v), id);
        incident_[u].push_back(id);
        incident_[v].push_back(id);
    }
    total_capacity_ += w;
}

void WeightedGraph::mark_steiner(Vertex v) {
    if (v < 0 || v >= n_) throw std::invalid_argument("steiner vertex out of range");
    if (!steiner_[v]) {
        steiner_[v] = 1;
        ++steiner_count_;
        steiner_sorted_.insert(std::lower_bound(steiner_sorted_.begin(), steiner_sorted_.end(), v), v);
    }
}

std::optional<int> WeightedGraph::find_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
    auto it = edge_index_.find(key(u, v));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

VertexSet WeightedGraph::steiner_set() const {
    VertexSet s(n_);
    for (Vertex v : steiner_sorted_) s.insert(v);
    return s;
}

namespace {

// Strict integer token: rejects decimals, trailing junk, empty tokens.
bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    auto* first = tok.data();
    auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

} // namespace

WeightedGraph WeightedGraph::parse(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    int edge_lines = 0;
    bool seen_header = false;
    WeightedGraph g;
    std::vector<char> declared;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;

        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);

        if (tag == "p") {
            if (seen_header) throw ParseError(ParseError::Kind::Malformed, lineno, "duplicate header");
            if (toks.size() != 2 || !parse_int(toks[0], n) || !parse_int(toks[1], m) || n < 1 || m < 0)
                throw ParseError(ParseError::Kind::Malformed, lineno, "expected `p <n> <m>`");
            seen_header = true;
            g = WeightedGraph(static_cast<int>(n));
            declared.assign(static_cast<std::size_t>(n), 0);
        } else if (tag == "s") {
            if (!seen_header) throw ParseError(ParseError::Kind::Malformed, lineno, "steiner line before header");
            long long v;
            if (toks.size() != 1 || !parse_int(toks[0], v) || v < 0 || v >= n)
                throw ParseError(ParseError::Kind::Malformed, lineno, "expected `s <vertex>`");
            if (declared[static_cast<std::size_t>(v)])
                throw ParseError(ParseError::Kind::DuplicateSteiner, lineno, "vertex " + toks[0]);
            declared[static_cast<std::size_t>(v)] = 1;
            g.mark_steiner(static_cast<Vertex>(v));
        } else if (tag == "e") {
            if (!seen_header) throw ParseError(ParseError::Kind::Malformed, lineno, "edge line before header");
            long long u, v, w;
            if (toks.size() != 3 || !parse_int(toks[0], u) || !parse_int(toks[1], v) || !parse_int(toks[2], w))
                throw ParseError(ParseError::Kind::Malformed, lineno, "expected `e <u> <v> <w>` with integer capacity");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(ParseError::Kind::Malformed, lineno, "endpoint out of range");
            if (u == v)
                throw ParseError(ParseError::Kind::Malformed, lineno, "self-loop");
            if (w < 0)
                throw ParseError(ParseError::Kind::NegativeCapacity, lineno, "capacity " + toks[2]);
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
            ++edge_lines;
        } else {
            throw ParseError(ParseError::Kind::Malformed, lineno, "unknown tag `" + tag + "`");
        }
    }
    if (!seen_header) throw ParseError(ParseError::Kind::Malformed, lineno, "missing `p` header");
    if (edge_lines != m)
        throw ParseError(ParseError::Kind::Malformed, lineno,
                         "header claims " + std::to_string(m) + " edges, found " + std::to_string(edge_lines));
    if (g.steiner_count() < 2)
        throw ParseError(ParseError::Kind::TooFewSteiner, lineno,
                         "|S| = " + std::to_string(g.steiner_count()) + ", need at least 2");
    return g;
}

void WeightedGraph::write(std::ostream& out) const {
    out << "p " << n_ << ' ' << edges_.size() << '\n';
    for (Vertex v : steiner_sorted_) out << "s " << v << '\n';
    for (const auto& e : edges_) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

Capacity cut_capacity(const WeightedGraph& g, const VertexSet& side) {
    if (!side.is_proper_nonempty())
        throw std::invalid_argument("cut side must be a nonempty proper subset");
    Capacity c = 0;
    for (const auto& e : g.edges())
        if (side.contains(e.u) != side.contains(e.v)) c += e.w;
    return c;
}

bool is_steiner_cut(const WeightedGraph& g, const VertexSet& side) {
    if (!side.is_proper_nonempty())
        throw std::invalid_argument("cut side must be a nonempty proper subset");
    bool in = false, out = false;
    for (Vertex s : g.steiner_vertices()) {
        (side.contains(s) ? in : out) = true;
        if (in && out) return true;
    }
    return false;
}

EdgeType classify_edge(const WeightedGraph& g, Vertex u, Vertex v) {
    if (!g.find_edge(u, v))
        throw QueryError(QueryError::Kind::UnknownEdge,
                         "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    bool su = g.is_steiner(u), sv = g.is_steiner(v);
    if (!su && !sv) return {EdgeKind::Type1};
    if (su && sv) return {EdgeKind::Type2};
    EdgeType t{EdgeKind::Type3};
    t.steiner_end = su ? u : v;
    t.nonsteiner_end = su ? v : u;
    return t;
}

std::string format_cut(const std::vector<Vertex>& side, Capacity cap) {
    std::ostringstream os;
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (i) os << ' ';
        os << side[i];
    }
    if (!side.empty()) os << ' ';
    os << "cap=" << cap;
    return os.str();
}

std::string format_cut(const VertexSet& side, Capacity cap) {
    return format_cut(side.to_vector(), cap);
}

} // namespace sentry
