#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// The oracles deliberately avoid the library's propagation machinery: reach
// is a fixpoint over a boolean (vertex, time) matrix, matching enumerates
// all edge subsets.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tempo/decomposition.hpp"
#include "tempo/temporal_graph.hpp"

namespace fixtures {

using tempo::TemporalEdge;
using tempo::TemporalGraph;
using tempo::TimeStep;
using tempo::Vertex;

// The six-vertex, fourteen-temporal-edge running example (lifetime 3).
// Vertex ids: 0 top-left, 1 mid-left, 2 bottom-left, 3 top-right,
// 4 mid-right, 5 bottom-right.
inline TemporalGraph example_graph() {
    std::vector<TemporalEdge> es;
    for (TimeStep t = 1; t <= 3; ++t) {
        es.emplace_back(0, 1, t); // left spine, all layers
        es.emplace_back(1, 2, t);
    }
    es.emplace_back(4, 5, 1);
    es.emplace_back(3, 4, 1);
    es.emplace_back(1, 4, 1);
    es.emplace_back(2, 5, 2);
    es.emplace_back(2, 5, 3);
    es.emplace_back(0, 3, 3);
    es.emplace_back(1, 5, 3);
    es.emplace_back(1, 3, 3);
    return TemporalGraph(6, 3, std::move(es));
}

// Treewidth-two graph with its six-bag decomposition (width 2): three
// top-middle-bottom columns joined left to right.
// ids: 0..2 first column (1 is the middle), 3..5 second (4 middle),
// 6..8 third (7 middle), 9..10 fourth.
inline tempo::StaticGraph width_two_graph() {
    tempo::StaticGraph g(11);
    for (auto [a, b] : {std::pair<int, int>{0, 1}, {1, 2}, {1, 4}, {3, 4}, {4, 5}, {5, 8},
                        {6, 7}, {7, 8}, {8, 10}, {7, 10}, {6, 9}, {7, 9}})
        g.add_edge(a, b);
    return g;
}

inline tempo::TreeDecomposition width_two_decomposition() {
    tempo::TreeDecomposition d;
    d.num_nodes = 6;
    // A={1,2} B={0,1} C={1,3,4} D={4,5,8} E={7,8,10} F={6,7,9}
    d.bags = {{1, 2}, {0, 1}, {1, 3, 4}, {4, 5, 8}, {7, 8, 10}, {6, 7, 9}};
    d.tree_edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    return d;
}

struct OracleQuery {
    Vertex source = 0;
    bool strict = false;
    std::optional<int> alpha;
    std::optional<int> beta;
    TimeStep depart_after = 1;
};

// Walk reachability by fixpoint over R[v][t] = "some admissible walk ends at
// v with last stamp t" (t = 0 encodes "still at the source").
inline std::vector<std::vector<char>> oracle_reach_table(const TemporalGraph& g,
                                                         const OracleQuery& q) {
    const int n = g.num_vertices();
    const int tau = g.lifetime();
    const long long gap_floor = q.strict ? 1 : 0;
    const long long alpha = std::max<long long>(q.alpha.value_or(gap_floor), gap_floor);
    const long long beta = q.beta ? *q.beta : (1LL << 40);
    std::vector<std::vector<char>> R(n, std::vector<char>(tau + 1, 0));
    R[q.source][0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : g.edges())
            for (int dir = 0; dir < 2; ++dir) {
                Vertex a = dir ? e.v : e.u;
                Vertex b = dir ? e.u : e.v;
                for (TimeStep prev = 0; prev <= tau; ++prev) {
                    if (!R[a][prev]) continue;
                    bool usable;
                    if (prev == 0)
                        usable = a == q.source && e.t >= q.depart_after;
                    else
                        usable = e.t - prev >= alpha && e.t - prev <= beta;
                    if (usable && !R[b][e.t]) {
                        R[b][e.t] = 1;
                        changed = true;
                    }
                }
            }
    }
    return R;
}

inline std::vector<Vertex> oracle_reachable_set(const TemporalGraph& g, const OracleQuery& q) {
    auto R = oracle_reach_table(g, q);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (TimeStep t = 0; t <= g.lifetime(); ++t)
            if (R[v][t]) {
                out.push_back(v);
                break;
            }
    return out;
}

// Earliest arrival at `target`, or -1.
inline int oracle_foremost_arrival(const TemporalGraph& g, const OracleQuery& q, Vertex target) {
    auto R = oracle_reach_table(g, q);
    for (TimeStep t = 1; t <= g.lifetime(); ++t)
        if (R[target][t]) return t;
    return -1;
}

// Maximum delta-temporal matching by subset enumeration.
inline int oracle_max_matching(const TemporalGraph& g, int delta) {
    const auto& es = g.edges();
    const int m = static_cast<int>(es.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask & (std::uint64_t{1} << i))) continue;
            for (int j = i + 1; j < m && ok; ++j) {
                if (!(mask & (std::uint64_t{1} << j))) continue;
                const bool disjoint = !(es[i].touches(es[j].u) || es[i].touches(es[j].v));
                if (!disjoint && std::abs(es[i].t - es[j].t) < delta) ok = false;
            }
        }
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

} // namespace fixtures
