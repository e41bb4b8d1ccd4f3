#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tempo/temporal_graph.hpp"

namespace tempo {

// Vertex appearances (v, t) are laid out row-major: id = (t-1)*n + v.
// This keeps expansion provenance computable without lookups.
inline int appearance_id(Vertex v, TimeStep t, int n) { return (t - 1) * n + v; }
inline std::pair<Vertex, TimeStep> appearance_of(int id, int n) { return {id % n, id / n + 1}; }

// Static expansion: rows 1..tau, both orientations of each temporal edge
// inside its row, plus column arcs (v,t)->(v,t+1).
inline StaticDigraph static_expansion(const TemporalGraph& g) {
    const int n = g.num_vertices();
    const TimeStep tau = g.lifetime();
    StaticDigraph h(n * tau);
    std::vector<std::pair<Vertex, TimeStep>> labels(n * tau);
    for (TimeStep t = 1; t <= tau; ++t)
        for (Vertex v = 0; v < n; ++v) labels[appearance_id(v, t, n)] = {v, t};
    for (const auto& e : g.edges()) {
        h.add_arc(appearance_id(e.u, e.t, n), appearance_id(e.v, e.t, n));
        h.add_arc(appearance_id(e.v, e.t, n), appearance_id(e.u, e.t, n));
    }
    for (Vertex v = 0; v < n; ++v)
        for (TimeStep t = 1; t + 1 <= tau; ++t)
            h.add_arc(appearance_id(v, t, n), appearance_id(v, t + 1, n));
    h.set_labels(std::move(labels));
    return h;
}

// Strict static expansion: rows 1..tau+1, diagonal arcs
// (u,t)->(v,t+1) and (v,t)->(u,t+1) per temporal edge, column arcs up to
// row tau+1. Always acyclic.
inline StaticDigraph strict_static_expansion(const TemporalGraph& g) {
    const int n = g.num_vertices();
    const TimeStep tau = g.lifetime();
    StaticDigraph h(n * (tau + 1));
    std::vector<std::pair<Vertex, TimeStep>> labels(n * (tau + 1));
    for (TimeStep t = 1; t <= tau + 1; ++t)
        for (Vertex v = 0; v < n; ++v) labels[appearance_id(v, t, n)] = {v, t};
    for (const auto& e : g.edges()) {
        h.add_arc(appearance_id(e.u, e.t, n), appearance_id(e.v, e.t + 1, n));
        h.add_arc(appearance_id(e.v, e.t, n), appearance_id(e.u, e.t + 1, n));
    }
    for (Vertex v = 0; v < n; ++v)
        for (TimeStep t = 1; t <= tau; ++t)
            h.add_arc(appearance_id(v, t, n), appearance_id(v, t + 1, n));
    h.set_labels(std::move(labels));
    return h;
}

// Orientation-forgetting version of the static expansion; antiparallel arc
// pairs merge into one edge.
inline StaticGraph undirected_static_expansion(const TemporalGraph& g) {
    StaticDigraph h = static_expansion(g);
    StaticGraph u(h.num_vertices());
    for (const auto& [a, b] : h.arcs()) u.add_edge(a, b);
    return u;
}

// Delta-temporal line graph: one vertex per temporal edge (in the graph's
// canonical (t,u,v) edge order); two vertices adjacent iff the edges share
// an endpoint and their time stamps differ by less than delta. Independent
// sets correspond exactly to delta-temporal matchings.
inline StaticGraph delta_temporal_line_graph(const TemporalGraph& g, int delta) {
    if (delta < 0) throw DomainError("delta must be nonnegative");
    const auto& es = g.edges();
    const int m = static_cast<int>(es.size());
    StaticGraph lg(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const bool share = es[i].touches(es[j].u) || es[i].touches(es[j].v);
            if (share && std::abs(es[i].t - es[j].t) < delta) lg.add_edge(i, j);
        }
    return lg;
}

// Underlying graph with per-edge bit labels: bit i-1 set iff the edge is
// present in layer i.
struct LabeledGraph {
    StaticGraph base;
    std::map<std::pair<Vertex, Vertex>, std::uint64_t> label;
};

inline LabeledGraph label_graph(const TemporalGraph& g) {
    if (g.lifetime() > 62) throw DomainError("label graph supports lifetimes up to 62");
    LabeledGraph lg;
    lg.base = g.underlying_graph();
    for (const auto& e : g.edges())
        lg.label[{e.u, e.v}] |= std::uint64_t{1} << (e.t - 1);
    return lg;
}

// Inverse of label_graph; reconstructs the temporal edge set from labels.
inline TemporalGraph temporal_graph_from_labels(const LabeledGraph& lg, TimeStep tau) {
    std::vector<TemporalEdge> edges;
    for (const auto& [e, bits] : lg.label)
        for (TimeStep t = 1; t <= tau; ++t)
            if (bits & (std::uint64_t{1} << (t - 1))) edges.emplace_back(e.first, e.second, t);
    return TemporalGraph(lg.base.num_vertices(), tau, std::move(edges));
}

} // namespace tempo
