#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tempo/decomposition.hpp"
#include "tempo/expansion.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

// Vertex appearance (v, t).
using Appearance = std::pair<Vertex, TimeStep>;
using AppearanceBag = std::vector<Appearance>; // sorted, unique

// Tree plus bags over vertex appearances (Def. 5 object).
struct TemporalTreeDecomposition {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<AppearanceBag> bags;

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }

    std::vector<std::vector<int>> node_adjacency() const {
        std::vector<std::vector<int>> adj(num_nodes);
        for (const auto& [a, b] : tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }
};

struct TtdcValidation {
    bool structure_ok = false;
    bool appearances_covered = false;  // (i)
    bool edges_cobagged = false;       // (ii)
    bool successions_cobagged = false; // (iii)
    bool occurrences_connected = false; // (iv)
    std::string detail;

    bool ok() const {
        return structure_ok && appearances_covered && edges_cobagged &&
               successions_cobagged && occurrences_connected;
    }
};

// Checks Def. 5 conditions (i)-(iv) with witnesses.
inline TtdcValidation validate_ttdc(const TemporalGraph& g, const TemporalTreeDecomposition& d) {
    TtdcValidation r;
    if (!is_tree(d.num_nodes, d.tree_edges) || static_cast<int>(d.bags.size()) != d.num_nodes) {
        r.detail = "decomposition tree is not a tree";
        return r;
    }
    const int n = g.num_vertices();
    const TimeStep tau = g.lifetime();
    for (const auto& bag : d.bags) {
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
            r.detail = "bag is not sorted/unique";
            return r;
        }
        for (const auto& [v, t] : bag)
            if (v < 0 || v >= n || t < 1 || t > tau) {
                r.detail = "bag contains an invalid appearance";
                return r;
            }
    }
    r.structure_ok = true;

    auto in_bag = [&](int u, Vertex v, TimeStep t) {
        return std::binary_search(d.bags[u].begin(), d.bags[u].end(), Appearance{v, t});
    };

    r.appearances_covered = true;
    for (Vertex v = 0; v < n && r.appearances_covered; ++v)
        for (TimeStep t = 1; t <= tau; ++t) {
            bool found = false;
            for (int u = 0; u < d.num_nodes && !found; ++u) found = in_bag(u, v, t);
            if (!found) {
                r.appearances_covered = false;
                r.detail = "appearance (" + std::to_string(v) + "," + std::to_string(t) + ") in no bag";
                break;
            }
        }

    r.edges_cobagged = true;
    for (const auto& e : g.edges()) {
        bool found = false;
        for (int u = 0; u < d.num_nodes && !found; ++u)
            found = in_bag(u, e.u, e.t) && in_bag(u, e.v, e.t);
        if (!found) {
            r.edges_cobagged = false;
            if (r.detail.empty())
                r.detail = "temporal edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
                           std::to_string(e.t) + ") endpoints never co-bagged";
            break;
        }
    }

    r.successions_cobagged = true;
    for (Vertex v = 0; v < n && r.successions_cobagged; ++v)
        for (TimeStep t = 1; t + 1 <= tau; ++t) {
            bool found = false;
            for (int u = 0; u < d.num_nodes && !found; ++u)
                found = in_bag(u, v, t) && in_bag(u, v, t + 1);
            if (!found) {
                r.successions_cobagged = false;
                if (r.detail.empty())
                    r.detail = "appearances (" + std::to_string(v) + "," + std::to_string(t) + ") and (" +
                               std::to_string(v) + "," + std::to_string(t + 1) + ") never co-bagged";
                break;
            }
        }

    r.occurrences_connected = true;
    auto adj = d.node_adjacency();
    for (Vertex v = 0; v < n && r.occurrences_connected; ++v)
        for (TimeStep t = 1; t <= tau; ++t) {
            std::vector<int> holders;
            for (int u = 0; u < d.num_nodes; ++u)
                if (in_bag(u, v, t)) holders.push_back(u);
            if (holders.size() <= 1) continue;
            std::vector<char> in_set(d.num_nodes, 0), seen(d.num_nodes, 0);
            for (int u : holders) in_set[u] = 1;
            std::vector<int> stack{holders[0]};
            seen[holders[0]] = 1;
            std::size_t cnt = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (in_set[y] && !seen[y]) { seen[y] = 1; ++cnt; stack.push_back(y); }
            }
            if (cnt != holders.size()) {
                r.occurrences_connected = false;
                if (r.detail.empty())
                    r.detail = "occurrences of appearance (" + std::to_string(v) + "," +
                               std::to_string(t) + ") are disconnected";
                break;
            }
        }
    return r;
}

// --- the four width parameters --------------------------------------------

enum class WidthMode { Exact, Heuristic };

inline int static_width(const StaticGraph& g, WidthMode mode, int budget) {
    return mode == WidthMode::Exact ? treewidth_exact(g, budget).first : treewidth_heuristic(g).first;
}

// Layer treewidth tw_inf: max over layers.
inline int tw_layers(const TemporalGraph& g, WidthMode mode = WidthMode::Exact, int budget = 25) {
    int best = g.num_vertices() > 0 ? 0 : -1;
    for (TimeStep t = 1; t <= g.lifetime(); ++t)
        best = std::max(best, static_width(g.layer(t), mode, budget));
    return best;
}

// Underlying treewidth tw_down.
inline int tw_underlying(const TemporalGraph& g, WidthMode mode = WidthMode::Exact, int budget = 25) {
    return static_width(g.underlying_graph(), mode, budget);
}

// Delta-slice treewidth tw_Delta: max over window unions of length delta.
inline int tw_slice(const TemporalGraph& g, TimeStep delta, WidthMode mode = WidthMode::Exact,
                    int budget = 25) {
    if (delta < 1 || delta > g.lifetime()) throw DomainError("delta outside 1..tau");
    int best = g.num_vertices() > 0 ? 0 : -1;
    for (TimeStep i = 1; i + delta - 1 <= g.lifetime(); ++i)
        best = std::max(best, static_width(g.window_union(i, delta), mode, budget));
    return best;
}

// Converts a decomposition of the undirected static expansion into a ttdc
// via the row-major appearance identification.
inline TemporalTreeDecomposition ttdc_from_expansion_tdc(const TreeDecomposition& d, int n) {
    TemporalTreeDecomposition out;
    out.num_nodes = d.num_nodes;
    out.tree_edges = d.tree_edges;
    out.bags.reserve(d.bags.size());
    for (const auto& bag : d.bags) {
        AppearanceBag ab;
        for (Vertex id : bag) ab.push_back(appearance_of(id, n));
        std::sort(ab.begin(), ab.end());
        out.bags.push_back(std::move(ab));
    }
    return out;
}

// Temporal treewidth via Observation 1: ttw equals the treewidth of the
// undirected static expansion. Falls back to the heuristic when the
// expansion exceeds the exact budget (flagged in the report below).
inline std::pair<int, TemporalTreeDecomposition> ttw(const TemporalGraph& g,
                                                     WidthMode mode = WidthMode::Exact,
                                                     int budget = 25) {
    StaticGraph expansion = undirected_static_expansion(g);
    int w;
    TreeDecomposition d;
    if (mode == WidthMode::Exact)
        std::tie(w, d) = treewidth_exact(expansion, budget);
    else
        std::tie(w, d) = treewidth_heuristic(expansion);
    return {w, ttdc_from_expansion_tdc(d, g.num_vertices())};
}

// Canonical bound construction: replace every vertex in every bag of a
// decomposition of the underlying graph by all its appearances. Width is at
// most (width(base)+1) * tau - 1.
inline TemporalTreeDecomposition canonical_ttdc(const TemporalGraph& g, const TreeDecomposition& base) {
    auto check = validate_tdc(g.underlying_graph(), base);
    if (!check.ok()) throw DomainError("canonical_ttdc: base decomposition invalid: " + check.detail);
    TemporalTreeDecomposition out;
    out.num_nodes = base.num_nodes;
    out.tree_edges = base.tree_edges;
    for (const auto& bag : base.bags) {
        AppearanceBag ab;
        for (Vertex v : bag)
            for (TimeStep t = 1; t <= g.lifetime(); ++t) ab.push_back({v, t});
        std::sort(ab.begin(), ab.end());
        out.bags.push_back(std::move(ab));
    }
    return out;
}

// Width report for the CLI; exact flags tell heuristic upper bounds apart
// from certified values.
struct WidthReport {
    int tw_layer_max = -1;
    bool tw_layer_exact = false;
    int tw_underlying = -1;
    bool tw_underlying_exact = false;
    std::map<TimeStep, std::pair<int, bool>> tw_slice; // delta -> (value, exact)
    int ttw = -1;
    bool ttw_exact = false;
};

inline WidthReport width_report(const TemporalGraph& g, const std::vector<TimeStep>& deltas,
                                WidthMode mode = WidthMode::Exact, int budget = 25) {
    WidthReport r;
    const bool exact = mode == WidthMode::Exact;
    r.tw_layer_max = tw_layers(g, mode, budget);
    r.tw_layer_exact = exact;
    r.tw_underlying = tw_underlying(g, mode, budget);
    r.tw_underlying_exact = exact;
    for (TimeStep delta : deltas) {
        r.tw_slice[delta] = {tw_slice(g, delta, mode, budget), exact};
    }
    // The expansion has n*tau vertices; fall back to the heuristic with a
    // cleared flag instead of failing the whole report.
    if (exact && g.num_vertices() * g.lifetime() <= budget) {
        r.ttw = ttw(g, WidthMode::Exact, budget).first;
        r.ttw_exact = true;
    } else {
        r.ttw = ttw(g, WidthMode::Heuristic, budget).first;
        r.ttw_exact = false;
    }
    return r;
}

// --- ttdc text format (mirrors .td with "v@t" bag entries) -----------------

inline void write_ttdc(const TemporalTreeDecomposition& d, int n, TimeStep tau, std::ostream& out) {
    out << "s ttdc " << d.num_nodes << ' ' << d.width() + 1 << ' ' << n << ' ' << tau << '\n';
    for (int i = 0; i < d.num_nodes; ++i) {
        out << "b " << i + 1;
        for (const auto& [v, t] : d.bags[i]) out << ' ' << v << '@' << t;
        out << '\n';
    }
    for (const auto& [a, b] : d.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

inline TemporalTreeDecomposition read_ttdc(std::istream& in) {
    TemporalTreeDecomposition d;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int declared = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        if (line[0] == 's') {
            std::string s, kind;
            int width_plus1, n, tau;
            if (!(fields >> s >> kind >> declared >> width_plus1 >> n >> tau) || kind != "ttdc")
                throw ParseError("line " + std::to_string(lineno) + ": bad solution line");
            d.num_nodes = declared;
            d.bags.assign(declared, {});
            have_header = true;
        } else if (line[0] == 'b') {
            if (!have_header) throw ParseError("line " + std::to_string(lineno) + ": bag before header");
            char bch;
            int id;
            fields >> bch >> id;
            if (id < 1 || id > declared)
                throw ParseError("line " + std::to_string(lineno) + ": bag id out of range");
            std::string token;
            while (fields >> token) {
                auto at = token.find('@');
                if (at == std::string::npos)
                    throw ParseError("line " + std::to_string(lineno) + ": bag entry must be v@t");
                d.bags[id - 1].push_back({std::stoi(token.substr(0, at)), std::stoi(token.substr(at + 1))});
            }
            std::sort(d.bags[id - 1].begin(), d.bags[id - 1].end());
        } else {
            if (!have_header) throw ParseError("line " + std::to_string(lineno) + ": edge before header");
            int a, b;
            if (!(fields >> a >> b)) throw ParseError("line " + std::to_string(lineno) + ": bad tree edge");
            d.tree_edges.push_back({a - 1, b - 1});
        }
    }
    if (!have_header) throw ParseError("missing 's ttdc' header");
    return d;
}

} // namespace tempo
