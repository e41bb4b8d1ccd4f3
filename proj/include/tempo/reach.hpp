#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "tempo/temporal_graph.hpp"

namespace tempo {

// Walk constraints. Strict queries default to gaps in [1, inf), non-strict
// to [0, inf); explicit alpha/beta narrow those ranges. depart_after bounds
// the first time stamp only (gap constraints apply between consecutive
// edges, not at the start).
struct WalkQuery {
    Vertex source = 0;
    std::optional<Vertex> target;
    bool strict = false;
    std::optional<int> alpha;
    std::optional<int> beta;
    TimeStep depart_after = 1;

    int effective_alpha() const {
        int a = alpha.value_or(strict ? 1 : 0);
        if (strict) a = std::max(a, 1);
        return a;
    }
    int effective_beta() const { return beta.value_or(std::numeric_limits<int>::max()); }

    void check() const {
        if (alpha && beta && *alpha > *beta) throw DomainError("alpha exceeds beta");
    }
};

struct TemporalWalk {
    std::vector<TemporalEdge> edges;

    bool empty() const { return edges.empty(); }
    TimeStep arrival() const { return edges.empty() ? 0 : edges.back().t; }

    // Vertex sequence, given the start vertex (edges are stored u<v).
    std::vector<Vertex> vertex_sequence(Vertex start) const {
        std::vector<Vertex> seq{start};
        Vertex cur = start;
        for (const auto& e : edges) {
            if (!e.touches(cur)) return {}; // not a chain from `start`
            cur = e.other(cur);
            seq.push_back(cur);
        }
        return seq;
    }
};

// True iff w is a walk of g from q.source satisfying all constraints in q.
// This is the universal checker for every solver that emits walks.
inline bool verify_walk(const TemporalGraph& g, const TemporalWalk& w, const WalkQuery& q) {
    q.check();
    auto seq = w.vertex_sequence(q.source);
    if (seq.empty()) return false;
    for (Vertex v : seq)
        if (v < 0 || v >= g.num_vertices()) return false;
    const int a = q.effective_alpha();
    const int b = q.effective_beta();
    TimeStep prev = -1;
    for (const auto& e : w.edges) {
        if (!g.has_edge(e.u, e.v, e.t)) return false;
        if (prev < 0) {
            if (e.t < q.depart_after) return false;
        } else {
            const int gap = e.t - prev;
            if (gap < a || gap > b) return false;
        }
        prev = e.t;
    }
    if (q.target && seq.back() != *q.target) return false;
    return true;
}

namespace detail {

// Label propagation over (vertex, last-arrival-time) states. State time 0
// means "at the source, not yet departed". Returns, per vertex, the sorted
// set of achievable arrival times, plus predecessor links for walk
// reconstruction.
struct ReachTable {
    // reached[v] holds arrival times; pred[(v,t)] = (u, t_prev, edge)
    std::vector<std::vector<TimeStep>> reached;
    std::map<std::pair<Vertex, TimeStep>, std::pair<std::pair<Vertex, TimeStep>, TemporalEdge>> pred;
};

inline ReachTable propagate(const TemporalGraph& g, const WalkQuery& q) {
    q.check();
    if (q.source < 0 || q.source >= g.num_vertices()) throw DomainError("source out of range");
    const int n = g.num_vertices();
    const int a = q.effective_alpha();
    const long long b = q.effective_beta();

    // incident[v] = edges touching v, sorted by time.
    std::vector<std::vector<TemporalEdge>> incident(n);
    for (const auto& e : g.edges()) {
        incident[e.u].push_back(e);
        incident[e.v].push_back(e);
    }

    ReachTable table;
    table.reached.assign(n, {});
    std::vector<std::vector<char>> seen(n, std::vector<char>(g.lifetime() + 1, 0));
    std::queue<std::pair<Vertex, TimeStep>> queue;

    auto push = [&](Vertex v, TimeStep t, std::pair<Vertex, TimeStep> from, const TemporalEdge& via) {
        if (seen[v][t]) return;
        seen[v][t] = 1;
        table.reached[v].push_back(t);
        table.pred[{v, t}] = {from, via};
        queue.push({v, t});
    };

    // Source state (source, 0): present from the start.
    seen[q.source][0] = 1;
    table.reached[q.source].push_back(0);
    queue.push({q.source, 0});

    while (!queue.empty()) {
        auto [v, t] = queue.front();
        queue.pop();
        const bool at_start = (t == 0);
        for (const auto& e : incident[v]) {
            TimeStep lo, hi;
            if (at_start) {
                lo = q.depart_after;
                hi = g.lifetime();
            } else {
                lo = t + a;
                hi = static_cast<TimeStep>(std::min<long long>(g.lifetime(), t + b));
            }
            if (e.t < lo || e.t > hi) continue;
            push(e.other(v), e.t, {v, t}, e);
        }
    }
    for (auto& times : table.reached) std::sort(times.begin(), times.end());
    return table;
}

} // namespace detail

// All vertices (including the source) reachable by a walk satisfying q.
inline std::vector<Vertex> reachable_set(const TemporalGraph& g, const WalkQuery& q) {
    auto table = detail::propagate(g, q);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!table.reached[v].empty()) out.push_back(v);
    return out;
}

// Earliest-arrival walk from q.source to q.target, or nullopt.
inline std::optional<TemporalWalk> foremost_walk(const TemporalGraph& g, const WalkQuery& q) {
    if (!q.target) throw DomainError("foremost_walk requires a target");
    if (*q.target == q.source) throw DomainError("foremost_walk requires source != target");
    auto table = detail::propagate(g, q);
    const auto& times = table.reached[*q.target];
    if (times.empty()) return std::nullopt;
    TimeStep best = times.front();
    TemporalWalk walk;
    std::pair<Vertex, TimeStep> cur{*q.target, best};
    while (!(cur.first == q.source && cur.second == 0)) {
        auto it = table.pred.find(cur);
        walk.edges.push_back(it->second.second);
        cur = it->second.first;
    }
    std::reverse(walk.edges.begin(), walk.edges.end());
    return walk;
}

// Reachability via strict (alpha,beta)-temporal *paths* (no repeated
// vertices). Walk and path reachability coincide for unconstrained gaps but
// differ once beta is finite, and the time-edge-deletion problem is stated
// over paths, so this gets its own search.
inline std::vector<Vertex> reachable_set_strict_paths(const TemporalGraph& g, Vertex source,
                                                      int alpha, int beta) {
    const int n = g.num_vertices();
    if (source < 0 || source >= n) throw DomainError("source out of range");
    std::vector<std::vector<TemporalEdge>> incident(n);
    for (const auto& e : g.edges()) {
        incident[e.u].push_back(e);
        incident[e.v].push_back(e);
    }
    const int a = std::max(alpha, 1);
    std::vector<char> reachable(n, 0), on_path(n, 0);
    reachable[source] = 1;

    // DFS over partial paths. Visited-state memoization is unsound here
    // because usable extensions depend on the vertices already on the path.
    auto dfs = [&](auto&& self, Vertex v, TimeStep t, bool first) -> void {
        for (const auto& e : incident[v]) {
            Vertex w = e.other(v);
            if (on_path[w]) continue;
            if (first) {
                if (e.t < 1) continue;
            } else {
                const int gap = e.t - t;
                if (gap < a || gap > beta) continue;
            }
            reachable[w] = 1;
            on_path[w] = 1;
            self(self, w, e.t, false);
            on_path[w] = 0;
        }
    };
    on_path[source] = 1;
    dfs(dfs, source, 0, true);
    on_path[source] = 0;

    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (reachable[v]) out.push_back(v);
    return out;
}

// Removes cycles from a walk, preserving the arrival time. Only meaningful
// for gap-unconstrained queries; with finite beta the pruned walk may
// violate the gap bounds.
inline TemporalWalk walk_to_path(const TemporalWalk& w, Vertex start) {
    auto seq = w.vertex_sequence(start);
    if (seq.empty()) return w;
    TemporalWalk out = w;
    bool changed = true;
    while (changed) {
        changed = false;
        auto s = out.vertex_sequence(start);
        for (std::size_t i = 0; i < s.size() && !changed; ++i)
            for (std::size_t j = s.size(); j-- > i + 1 && !changed;)
                if (s[i] == s[j]) {
                    out.edges.erase(out.edges.begin() + static_cast<long>(i),
                                    out.edges.begin() + static_cast<long>(j));
                    changed = true;
                }
    }
    return out;
}

} // namespace tempo
