#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tempo/reach.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

// ===========================================================================
// 3-SAT(3) -> Return-To-Base Temporal Graph Exploration
// ===========================================================================

// Clause literals: +i means x_i, -i means the negation (i is 1-based).
struct Sat3Formula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    void check() const {
        std::vector<int> occurrences(num_vars + 1, 0);
        for (const auto& c : clauses) {
            if (c.empty()) throw DomainError("empty clause");
            if (c.size() > 3) throw DomainError("clause with more than three literals");
            for (int lit : c) {
                int var = lit > 0 ? lit : -lit;
                if (lit == 0 || var > num_vars) throw DomainError("literal out of range");
                if (++occurrences[var] > 3)
                    throw DomainError("variable x" + std::to_string(var) +
                                      " appears in more than three clauses");
            }
        }
    }

    bool satisfiable() const {
        for (std::uint32_t assign = 0; assign < (std::uint32_t{1} << num_vars); ++assign) {
            bool all = true;
            for (const auto& c : clauses) {
                bool sat = false;
                for (int lit : c) {
                    int var = (lit > 0 ? lit : -lit) - 1;
                    bool val = assign & (std::uint32_t{1} << var);
                    if ((lit > 0) == val) { sat = true; break; }
                }
                if (!sat) { all = false; break; }
            }
            if (all) return true;
        }
        return num_vars == 0 ? clauses.empty() : false;
    }
};

// Stamp schedule of the star construction, kept for the CLI sidecar.
struct RtbtgeConstruction {
    TemporalGraph graph;
    Vertex source;
    // Per variable: the three stamps of its leaf edge. Entering at false_in
    // and leaving at mid occupies the false block; mid..true_out is the true
    // block.
    struct VariableStamps {
        TimeStep false_in, mid, true_out;
    };
    std::vector<VariableStamps> variables;
    // Per clause: one (entry, exit) window per literal, strictly inside the
    // literal's opposite-polarity block.
    std::vector<std::vector<std::pair<TimeStep, TimeStep>>> clause_windows;
};

// Star construction behind the hardness of RTB-TGE: one leaf per variable
// and per clause, all edges sharing the center s. A variable leaf offers a
// "false" visit [f,m] and a "true" visit [m,t]; every clause window for an
// unnegated literal lies strictly inside the false block (usable exactly
// when the variable leaf is visited true), negated literals mirror this in
// the true block. The formula is satisfiable iff the instance is
// RTB-explorable from the center.
inline RtbtgeConstruction gen_rtbtge_from_sat(const Sat3Formula& f) {
    f.check();
    const int nv = f.num_vars;
    const int nc = static_cast<int>(f.clauses.size());
    const Vertex center = 0;
    auto var_leaf = [&](int i) { return 1 + i; };            // i is 0-based
    auto clause_leaf = [&](int j) { return 1 + nv + j; };    // j is 0-based

    // Occurrence lists per (variable, polarity), in clause order.
    std::vector<std::vector<std::pair<int, bool>>> unneg(nv), neg(nv); // (clause, slot unused)
    for (int j = 0; j < nc; ++j)
        for (int lit : f.clauses[j])
            (lit > 0 ? unneg[lit - 1] : neg[-lit - 1]).push_back({j, true});

    RtbtgeConstruction out{TemporalGraph(1, 1, {}), center, {}, {}};
    out.clause_windows.resize(nc);
    std::vector<TemporalEdge> edges;
    TimeStep cursor = 0;
    for (int i = 0; i < nv; ++i) {
        RtbtgeConstruction::VariableStamps st{};
        st.false_in = ++cursor;
        for (const auto& [j, _] : unneg[i]) {
            TimeStep in = ++cursor, ex = ++cursor;
            out.clause_windows[j].push_back({in, ex});
            edges.emplace_back(center, clause_leaf(j), in);
            edges.emplace_back(center, clause_leaf(j), ex);
        }
        st.mid = ++cursor;
        for (const auto& [j, _] : neg[i]) {
            TimeStep in = ++cursor, ex = ++cursor;
            out.clause_windows[j].push_back({in, ex});
            edges.emplace_back(center, clause_leaf(j), in);
            edges.emplace_back(center, clause_leaf(j), ex);
        }
        st.true_out = ++cursor;
        edges.emplace_back(center, var_leaf(i), st.false_in);
        edges.emplace_back(center, var_leaf(i), st.mid);
        edges.emplace_back(center, var_leaf(i), st.true_out);
        out.variables.push_back(st);
    }
    const TimeStep tau = cursor > 0 ? cursor : 1;
    out.graph = TemporalGraph(1 + nv + nc, tau, std::move(edges));
    return out;
}

// ===========================================================================
// Clique -> (alpha,beta)-TRTED
// ===========================================================================

struct CliqueInstance {
    StaticGraph graph;
    int r = 1;

    void check() const {
        if (r < 0 || r > graph.num_vertices()) throw DomainError("clique size out of range");
    }

    bool has_clique() const {
        const int n = graph.num_vertices();
        if (r <= 1) return r >= 0 && (r == 0 || n >= 1);
        std::vector<int> comb(r);
        for (int i = 0; i < r; ++i) comb[i] = i;
        while (true) {
            bool ok = true;
            for (int i = 0; i < r && ok; ++i)
                for (int j = i + 1; j < r && ok; ++j)
                    if (!graph.has_edge(comb[i], comb[j])) ok = false;
            if (ok) return true;
            int i = r - 1;
            while (i >= 0 && comb[i] == n - r + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
        }
        return false;
    }
};

struct TrtedInstance {
    TemporalGraph graph = TemporalGraph(1, 1, {});
    int alpha = 1, beta = 1;
    int k = 0, h = 0;
    Vertex x = 0, y = 1; // star centers
    // e_leaf[l] is the vertex standing for input edge l (graph.edges()
    // order); p_leaf[l] the matching first-star leaf.
    std::vector<Vertex> p_leaf, e_leaf;
};

// Two stars with adjacent centers x,y: {x,y} present at i*beta+2 per input
// vertex v_i, and {y,e_l} present at i*beta+alpha+2 and j*beta+alpha+2 for
// input edge e_l = {v_i,v_j}. With k = r, a clique of size r is exactly
// what lets r deletions cut x's strict (alpha,beta)-path reach by r choose 2.
//
// Two guards keep that equivalence tight at small r: first-star leaves hang
// on two early stamps (1 and 2), so removing a leaf from x's reach costs two
// deletions, and the {x,y} edge gets at least r+1 copies so it cannot be
// wiped entirely within the deletion budget.
inline TrtedInstance gen_trted_from_clique(const CliqueInstance& c, int alpha, int beta) {
    c.check();
    if (beta < 1) throw DomainError("beta must be at least 1");
    if (alpha < 0 || alpha > beta) throw DomainError("need 0 <= alpha <= beta");
    const int n = c.graph.num_vertices();
    const int m = c.graph.num_edges();
    const int copies = std::max(n, c.r + 1);

    TrtedInstance inst;
    inst.alpha = alpha;
    inst.beta = beta;
    inst.k = c.r;
    inst.x = 0;
    inst.y = 1;
    const TimeStep tau = copies * beta + alpha + 2;
    std::vector<TemporalEdge> edges;
    for (int l = 0; l < m; ++l) {
        inst.p_leaf.push_back(2 + l);
        inst.e_leaf.push_back(2 + m + l);
        edges.emplace_back(inst.x, inst.p_leaf[l], 1);
        edges.emplace_back(inst.x, inst.p_leaf[l], 2);
    }
    for (int i = 1; i <= copies; ++i) edges.emplace_back(inst.x, inst.y, i * beta + 2);
    for (int l = 0; l < m; ++l) {
        const auto& [a, b] = c.graph.edges()[l];
        const int i = a + 1, j = b + 1;
        edges.emplace_back(inst.y, inst.e_leaf[l], i * beta + alpha + 2);
        if (j * beta + alpha + 2 != i * beta + alpha + 2)
            edges.emplace_back(inst.y, inst.e_leaf[l], j * beta + alpha + 2);
    }
    inst.graph = TemporalGraph(2 + 2 * m, tau, std::move(edges));

    // h = x's baseline reach minus r choose 2; x has the maximum reach by
    // construction.
    const int baseline =
        static_cast<int>(reachable_set_strict_paths(inst.graph, inst.x, alpha, beta).size());
    inst.h = baseline - c.r * (c.r - 1) / 2;
    return inst;
}

// ===========================================================================
// Random instances
// ===========================================================================

namespace detail {

// Uniform double in [0,1) pinned to the mt19937_64 bit stream, so the same
// seed yields the same graph on every platform.
inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace detail

// Each (pair, time) present independently with probability p. Pairs are
// scanned in lexicographic order, times innermost.
inline TemporalGraph gen_random(int n, TimeStep tau, double p, std::uint64_t seed) {
    if (n < 1 || tau < 1) throw DomainError("gen_random: need n >= 1 and tau >= 1");
    if (p < 0.0 || p > 1.0) throw DomainError("gen_random: probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<TemporalEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (TimeStep t = 1; t <= tau; ++t)
                if (detail::unit_draw(rng) < p) edges.emplace_back(u, v, t);
    return TemporalGraph(n, tau, std::move(edges));
}

// Weighted variant used by the r-MTC tests: weights are small integers
// drawn from 0..9.
inline TemporalGraph gen_random_weighted(int n, TimeStep tau, double p, std::uint64_t seed) {
    TemporalGraph base = gen_random(n, tau, p, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::map<TemporalEdge, Rational> w;
    for (const auto& e : base.edges()) w[e] = Rational(static_cast<std::int64_t>(rng() % 10));
    return TemporalGraph(base.num_vertices(), base.lifetime(), base.edges(), std::move(w));
}

// Every layer holds a uniform random spanning tree plus extra edges with
// probability extra_p; feeds the always-connected exploration tests.
inline TemporalGraph gen_connected_layers(int n, TimeStep tau, double extra_p, std::uint64_t seed) {
    if (n < 1 || tau < 1) throw DomainError("gen_connected_layers: need n >= 1 and tau >= 1");
    if (extra_p < 0.0 || extra_p > 1.0) throw DomainError("probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::set<TemporalEdge> edges;
    for (TimeStep t = 1; t <= tau; ++t) {
        std::vector<Vertex> perm(n);
        for (Vertex v = 0; v < n; ++v) perm[v] = v;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng() % (i + 1)]);
        for (int i = 1; i < n; ++i)
            edges.insert(TemporalEdge(perm[i], perm[rng() % i], t));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (detail::unit_draw(rng) < extra_p) edges.insert(TemporalEdge(u, v, t));
    }
    return TemporalGraph(n, tau, {edges.begin(), edges.end()});
}

} // namespace tempo
