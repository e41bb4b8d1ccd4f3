#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tempo/rational.hpp"

namespace tempo {

using Vertex = int;
using TimeStep = int;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Time-stamped edge, canonicalized with u < v.
struct TemporalEdge {
    Vertex u = 0;
    Vertex v = 0;
    TimeStep t = 1;

    TemporalEdge() = default;
    TemporalEdge(Vertex a, Vertex b, TimeStep time) : u(std::min(a, b)), v(std::max(a, b)), t(time) {
        if (a == b) throw DomainError("temporal edge must not be a self-loop");
    }

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
    friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;

    bool touches(Vertex w) const { return u == w || v == w; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
};

// Undirected simple graph on vertices 0..n-1.
class StaticGraph {
public:
    StaticGraph() = default;
    explicit StaticGraph(int n) : n_(n) {
        if (n < 0) throw DomainError("vertex count must be nonnegative");
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    void add_edge(Vertex a, Vertex b) {
        if (a == b) throw DomainError("self-loop");
        check_vertex(a);
        check_vertex(b);
        auto e = std::minmax(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second));
        if (it != edges_.end() && *it == std::make_pair(e.first, e.second)) return;
        edges_.insert(it, {e.first, e.second});
    }

    bool has_edge(Vertex a, Vertex b) const {
        if (a == b) return false;
        auto e = std::minmax(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(e.first, e.second));
    }

    std::vector<std::vector<Vertex>> adjacency() const {
        std::vector<std::vector<Vertex>> adj(n_);
        for (const auto& [a, b] : edges_) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        auto adj = adjacency();
        std::vector<char> seen(n_, 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[v])
                if (!seen[w]) { seen[w] = 1; ++cnt; stack.push_back(w); }
        }
        return cnt == n_;
    }

    friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw DomainError("vertex id out of range");
    }

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_; // sorted, unique
};

// Directed graph; labels carry (vertex, time row) provenance for expansions.
class StaticDigraph {
public:
    StaticDigraph() = default;
    explicit StaticDigraph(int n) : n_(n) {
        if (n < 0) throw DomainError("vertex count must be nonnegative");
    }

    int num_vertices() const { return n_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }

    void add_arc(Vertex a, Vertex b) {
        if (a == b) throw DomainError("self-loop");
        if (a < 0 || a >= n_ || b < 0 || b >= n_) throw DomainError("vertex id out of range");
        auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::make_pair(a, b));
        if (it != arcs_.end() && *it == std::make_pair(a, b)) return;
        arcs_.insert(it, {a, b});
    }

    bool has_arc(Vertex a, Vertex b) const {
        return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(a, b));
    }

    std::vector<std::vector<Vertex>> out_adjacency() const {
        std::vector<std::vector<Vertex>> adj(n_);
        for (const auto& [a, b] : arcs_) adj[a].push_back(b);
        return adj;
    }

    bool acyclic() const {
        auto adj = out_adjacency();
        std::vector<int> indeg(n_, 0);
        for (const auto& [a, b] : arcs_) ++indeg[b];
        std::vector<Vertex> queue;
        for (Vertex v = 0; v < n_; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        int processed = 0;
        while (!queue.empty()) {
            Vertex v = queue.back();
            queue.pop_back();
            ++processed;
            for (Vertex w : adj[v])
                if (--indeg[w] == 0) queue.push_back(w);
        }
        return processed == n_;
    }

    // Optional per-vertex (original vertex, time row) labels.
    void set_labels(std::vector<std::pair<Vertex, TimeStep>> labels) { labels_ = std::move(labels); }
    const std::vector<std::pair<Vertex, TimeStep>>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> arcs_; // sorted, unique
    std::vector<std::pair<Vertex, TimeStep>> labels_;
};

// Temporal graph: n vertices, lifetime tau, set of time-stamped edges.
// Immutable after construction; all solvers share instances read-only.
class TemporalGraph {
public:
    TemporalGraph(int n, TimeStep tau, std::vector<TemporalEdge> edges,
                  std::optional<std::map<TemporalEdge, Rational>> weights = std::nullopt)
        : n_(n), tau_(tau), edges_(std::move(edges)), weights_(std::move(weights)) {
        if (n_ < 0) throw DomainError("vertex count must be nonnegative");
        if (tau_ < 1) throw DomainError("lifetime must be a positive integer");
        std::sort(edges_.begin(), edges_.end(), by_time_then_pair);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            if (e.u < 0 || e.v >= n_) throw DomainError("temporal edge endpoint out of range");
            if (e.t < 1 || e.t > tau_) throw DomainError("time stamp outside 1..tau");
            if (i > 0 && edges_[i] == edges_[i - 1]) throw DomainError("duplicate temporal edge");
        }
        if (weights_) {
            for (const auto& e : edges_)
                if (!weights_->count(e)) throw DomainError("weighted graph is missing an edge weight");
        }
    }

    int num_vertices() const { return n_; }
    TimeStep lifetime() const { return tau_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<TemporalEdge>& edges() const { return edges_; }
    bool has_weights() const { return weights_.has_value(); }

    bool has_edge(Vertex a, Vertex b, TimeStep t) const {
        if (a == b) return false;
        TemporalEdge probe(a, b, t);
        return std::binary_search(edges_.begin(), edges_.end(), probe,
                                  [](const TemporalEdge& x, const TemporalEdge& y) { return by_time_then_pair(x, y); });
    }

    // Weight of an edge; defaults to 1 for unweighted instances.
    Rational weight(const TemporalEdge& e) const {
        if (!weights_) return Rational(1);
        return weights_->at(e);
    }

    StaticGraph underlying_graph() const {
        StaticGraph g(n_);
        for (const auto& e : edges_) g.add_edge(e.u, e.v);
        return g;
    }

    StaticGraph layer(TimeStep t) const {
        if (t < 1 || t > tau_) throw DomainError("layer index outside 1..tau");
        StaticGraph g(n_);
        for (const auto& e : edges_)
            if (e.t == t) g.add_edge(e.u, e.v);
        return g;
    }

    // Union graph G_i^(delta) of layers i..i+delta-1.
    StaticGraph window_union(TimeStep i, TimeStep delta) const {
        if (i < 1 || delta < 1 || i + delta - 1 > tau_) throw DomainError("window outside 1..tau");
        StaticGraph g(n_);
        for (const auto& e : edges_)
            if (e.t >= i && e.t <= i + delta - 1) g.add_edge(e.u, e.v);
        return g;
    }

    // Drops all edges incident to flagged vertices; ids are preserved.
    TemporalGraph remove_vertices(const std::vector<char>& removed) const {
        std::vector<TemporalEdge> kept;
        for (const auto& e : edges_)
            if (!removed[e.u] && !removed[e.v]) kept.push_back(e);
        return TemporalGraph(n_, tau_, std::move(kept));
    }

    TemporalGraph remove_edges(const std::vector<TemporalEdge>& doomed) const {
        std::set<TemporalEdge> gone(doomed.begin(), doomed.end());
        std::vector<TemporalEdge> kept;
        for (const auto& e : edges_)
            if (!gone.count(e)) kept.push_back(e);
        std::optional<std::map<TemporalEdge, Rational>> w;
        if (weights_) {
            w.emplace();
            for (const auto& e : kept) (*w)[e] = weights_->at(e);
        }
        return TemporalGraph(n_, tau_, std::move(kept), std::move(w));
    }

    std::vector<Vertex> isolated_vertices() const {
        std::vector<char> touched(n_, 0);
        for (const auto& e : edges_) touched[e.u] = touched[e.v] = 1;
        std::vector<Vertex> iso;
        for (Vertex v = 0; v < n_; ++v)
            if (!touched[v]) iso.push_back(v);
        return iso;
    }

    friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

private:
    static bool by_time_then_pair(const TemporalEdge& a, const TemporalEdge& b) {
        return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
    }

    int n_;
    TimeStep tau_;
    std::vector<TemporalEdge> edges_; // sorted by (t, u, v)
    std::optional<std::map<TemporalEdge, Rational>> weights_;
};

// --- .tg text format -------------------------------------------------------
//
// First line "n tau"; each following non-comment line "u v t" or "u v t w"
// (w a nonnegative decimal weight). '#' starts a comment line.

inline TemporalGraph parse_temporal_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    int n = -1;
    TimeStep tau = -1;
    std::vector<TemporalEdge> edges;
    std::set<TemporalEdge> seen;
    std::map<TemporalEdge, Rational> weights;
    int weighted = -1; // -1 undecided, then 0/1

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
        std::size_t first = sv.find_first_not_of(" \t");
        if (first == std::string_view::npos || sv[first] == '#') continue;
        std::istringstream fields{std::string(sv)};
        if (n < 0) {
            if (!(fields >> n >> tau)) throw fail("expected header 'n tau'");
            std::string extra;
            if (fields >> extra) throw fail("trailing tokens after header");
            if (n < 1) throw fail("vertex count must be at least 1");
            if (tau < 1) throw fail("lifetime must be at least 1");
            continue;
        }
        long long u, v, t;
        if (!(fields >> u >> v >> t)) throw fail("expected 'u v t' or 'u v t w'");
        std::string wtoken;
        bool has_w = static_cast<bool>(fields >> wtoken);
        std::string extra;
        if (fields >> extra) throw fail("trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n) throw fail("vertex id out of range 0..n-1");
        if (u == v) throw fail("self-loop");
        if (t < 1 || t > tau) throw fail("time stamp outside 1..tau");
        if (weighted == -1) weighted = has_w ? 1 : 0;
        if (static_cast<bool>(weighted) != has_w)
            throw fail(has_w ? "unexpected weight on unweighted graph" : "missing weight on weighted graph");
        TemporalEdge e(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<TimeStep>(t));
        if (has_w) {
            Rational w;
            try {
                w = Rational::parse_decimal(wtoken);
            } catch (const std::exception& ex) {
                throw fail(ex.what());
            }
            weights[e] = w;
        }
        if (!seen.insert(e).second) throw fail("duplicate temporal edge");
        edges.push_back(e);
    }
    if (n < 0) throw ParseError("line 1: missing header 'n tau'");
    try {
        if (weighted == 1) return TemporalGraph(n, tau, std::move(edges), std::move(weights));
        return TemporalGraph(n, tau, std::move(edges));
    } catch (const DomainError& ex) {
        throw ParseError(std::string("invalid graph: ") + ex.what());
    }
}

inline TemporalGraph parse_temporal_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_temporal_graph(in);
}

inline void serialize_temporal_graph(const TemporalGraph& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.lifetime() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << e.t;
        if (g.has_weights()) out << ' ' << g.weight(e).to_decimal_string();
        out << '\n';
    }
}

inline std::string serialize_temporal_graph(const TemporalGraph& g) {
    std::ostringstream out;
    serialize_temporal_graph(g, out);
    return out.str();
}

} // namespace tempo
