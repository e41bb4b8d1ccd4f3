#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "tempo/decomposition.hpp"
#include "tempo/expansion.hpp"
#include "tempo/rational.hpp"
#include "tempo/reach.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

// ===========================================================================
// Temporal Separation
// ===========================================================================

struct SeparationInstance {
    Vertex s = 0;
    Vertex z = 1;
    bool strict = false;
};

struct SeparationResult {
    bool feasible = false;
    std::vector<Vertex> separator; // sorted
};

inline bool has_direct_edge(const TemporalGraph& g, Vertex a, Vertex b) {
    for (const auto& e : g.edges())
        if (e.touches(a) && e.touches(b)) return true;
    return false;
}

inline bool z_reachable(const TemporalGraph& g, const SeparationInstance& inst,
                        const std::vector<char>& removed) {
    TemporalGraph h = g.remove_vertices(removed);
    WalkQuery q;
    q.source = inst.s;
    q.strict = inst.strict;
    auto reach = reachable_set(h, q);
    return std::binary_search(reach.begin(), reach.end(), inst.z);
}

// Smallest s-z separator of size <= k by subset enumeration; the oracle the
// tree-decomposition DP is checked against.
inline SeparationResult separation_bruteforce(const TemporalGraph& g, const SeparationInstance& inst,
                                              int k, int budget_n = 16) {
    const int n = g.num_vertices();
    if (n > budget_n)
        throw BudgetError("separation_bruteforce: instance exceeds vertex budget");
    if (inst.s == inst.z || inst.s < 0 || inst.z < 0 || inst.s >= n || inst.z >= n)
        throw DomainError("separation: bad terminals");
    if (has_direct_edge(g, inst.s, inst.z)) return {};

    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v)
        if (v != inst.s && v != inst.z) pool.push_back(v);

    std::vector<char> removed(n, 0);
    for (int size = 0; size <= std::min<int>(k, static_cast<int>(pool.size())); ++size) {
        // Lexicographically ordered size-`size` combinations of `pool`.
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int i : comb) removed[pool[i]] = 1;
            if (!z_reachable(g, inst, removed)) {
                SeparationResult r;
                r.feasible = true;
                for (int i : comb) r.separator.push_back(pool[i]);
                return r;
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == static_cast<int>(pool.size()) - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return {};
}

struct SeparationDpStats {
    std::size_t max_table_rows = 0;
};

namespace detail {

// Class labels for the separation DP: the guessed partition assigns each
// vertex one of S, Z, A_1..A_tau. A_t certifies "not reachable from s
// before time t"; the table keeps one row per consistent bag labeling.
constexpr int kClassS = -1;
constexpr int kClassZ = 0;

struct SepEntry {
    int cost = 0;
    std::vector<Vertex> witness; // sorted S-vertices committed so far
};

inline bool sep_better(const SepEntry& a, const SepEntry& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.witness < b.witness;
}

// Closure check for one temporal edge {u,v} at time t: if u's label admits
// reaching u early enough to traverse, then v's label must admit arrival at
// t. The source has arrival 0; Z means unreachable and never propagates.
inline bool sep_edge_ok(int cls_u, bool u_is_source, int cls_v, TimeStep t, bool strict) {
    if (!u_is_source && cls_u == kClassZ) return true;
    const int arr_u = u_is_source ? 0 : cls_u;
    const bool usable = strict ? arr_u < t : arr_u <= t;
    if (!usable) return true;
    if (cls_v == kClassZ) return false;
    return cls_v <= t;
}

} // namespace detail

// Temporal Separation DP over a nice tree decomposition of the underlying
// graph, with bag labelings over tau+2 classes. Matches
// separation_bruteforce on feasibility and optimum size.
inline SeparationResult separation_dp(const TemporalGraph& g, const SeparationInstance& inst, int k,
                                      const TreeDecomposition& d,
                                      SeparationDpStats* stats = nullptr) {
    const int n = g.num_vertices();
    if (inst.s == inst.z || inst.s < 0 || inst.z < 0 || inst.s >= n || inst.z >= n)
        throw DomainError("separation: bad terminals");
    auto check = validate_tdc(g.underlying_graph(), d);
    if (!check.ok()) throw DomainError("separation_dp: invalid decomposition: " + check.detail);
    if (has_direct_edge(g, inst.s, inst.z)) return {};

    const TimeStep tau = g.lifetime();
    NiceTreeDecomposition nice = make_nice(d);

    // Temporal stamps per underlying edge.
    std::map<std::pair<Vertex, Vertex>, std::vector<TimeStep>> stamps;
    for (const auto& e : g.edges()) stamps[{e.u, e.v}].push_back(e.t);

    using Key = std::vector<int>; // class per bag vertex, in sorted-bag order
    using Table = std::map<Key, detail::SepEntry>;

    auto order = nice.postorder();
    std::vector<Table> tables(nice.nodes.size());
    std::size_t max_rows = 0;

    for (int x : order) {
        const auto& nd = nice.nodes[x];
        Table& table = tables[x];
        switch (nd.tag) {
            case NiceTag::Leaf:
                table[{}] = {0, {}};
                break;
            case NiceTag::Introduce: {
                const auto& child = tables[nd.child];
                const Bag& bag = nd.bag;
                const Vertex v = nd.vertex;
                const int pos = static_cast<int>(
                    std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
                std::vector<int> classes;
                if (v == inst.s) classes = {1};
                else if (v == inst.z) classes = {detail::kClassZ};
                else {
                    classes.push_back(detail::kClassS);
                    classes.push_back(detail::kClassZ);
                    for (TimeStep t = 1; t <= tau; ++t) classes.push_back(t);
                }
                for (const auto& [key, entry] : child) {
                    for (int cls : classes) {
                        if (entry.cost + (cls == detail::kClassS ? 1 : 0) > k) continue;
                        bool ok = true;
                        if (cls != detail::kClassS) {
                            for (std::size_t i = 0; i < bag.size() && ok; ++i) {
                                if (static_cast<int>(i) == pos) continue;
                                const Vertex u = bag[i];
                                const int cls_u = key[i > static_cast<std::size_t>(pos) ? i - 1 : i];
                                if (cls_u == detail::kClassS) continue;
                                auto it = stamps.find(std::minmax(u, v));
                                if (it == stamps.end()) continue;
                                for (TimeStep t : it->second) {
                                    if (!detail::sep_edge_ok(cls_u, u == inst.s, cls, t, inst.strict) ||
                                        !detail::sep_edge_ok(cls, v == inst.s, cls_u, t, inst.strict)) {
                                        ok = false;
                                        break;
                                    }
                                }
                            }
                        }
                        if (!ok) continue;
                        Key nk = key;
                        nk.insert(nk.begin() + pos, cls);
                        detail::SepEntry ne = entry;
                        if (cls == detail::kClassS) {
                            ne.cost += 1;
                            ne.witness.insert(
                                std::lower_bound(ne.witness.begin(), ne.witness.end(), v), v);
                        }
                        auto [it2, inserted] = table.try_emplace(std::move(nk), ne);
                        if (!inserted && detail::sep_better(ne, it2->second)) it2->second = ne;
                    }
                }
                break;
            }
            case NiceTag::Forget: {
                const auto& child = tables[nd.child];
                const Bag& child_bag = nice.nodes[nd.child].bag;
                const int pos = static_cast<int>(
                    std::lower_bound(child_bag.begin(), child_bag.end(), nd.vertex) - child_bag.begin());
                for (const auto& [key, entry] : child) {
                    Key nk = key;
                    nk.erase(nk.begin() + pos);
                    auto [it2, inserted] = table.try_emplace(std::move(nk), entry);
                    if (!inserted && detail::sep_better(entry, it2->second)) it2->second = entry;
                }
                break;
            }
            case NiceTag::Join: {
                const auto& left = tables[nd.child];
                const auto& right = tables[nd.child2];
                for (const auto& [key, le] : left) {
                    auto it = right.find(key);
                    if (it == right.end()) continue;
                    const auto& re = it->second;
                    detail::SepEntry ne;
                    // Bag S-vertices are counted in both children.
                    int shared = 0;
                    for (int cls : key)
                        if (cls == detail::kClassS) ++shared;
                    ne.cost = le.cost + re.cost - shared;
                    if (ne.cost > k) continue;
                    ne.witness.resize(le.witness.size() + re.witness.size());
                    auto end = std::set_union(le.witness.begin(), le.witness.end(),
                                              re.witness.begin(), re.witness.end(),
                                              ne.witness.begin());
                    ne.witness.erase(end, ne.witness.end());
                    auto [it2, inserted] = table.try_emplace(key, ne);
                    if (!inserted && detail::sep_better(ne, it2->second)) it2->second = ne;
                }
                break;
            }
        }
        max_rows = std::max(max_rows, table.size());
        if (nd.child >= 0) tables[nd.child].clear();
        if (nd.child2 >= 0) tables[nd.child2].clear();
    }
    if (stats) stats->max_table_rows = max_rows;

    const Table& root = tables[nice.root];
    auto it = root.find({});
    if (it == root.end() || it->second.cost > k) return {};
    SeparationResult r;
    r.feasible = true;
    r.separator = it->second.witness;
    return r;
}

// ===========================================================================
// Minimum Single-Source Temporal Connectivity (r-MTC)
// ===========================================================================

struct RmtcResult {
    bool feasible = false;
    Rational total_weight;
    std::vector<TemporalEdge> edges; // chosen spanning subset, sorted
};

// Every vertex reachable from root via a non-strict temporal path?
inline bool temporally_r_connected(const TemporalGraph& g, Vertex root) {
    WalkQuery q;
    q.source = root;
    q.strict = false;
    return static_cast<int>(reachable_set(g, q).size()) == g.num_vertices();
}

inline RmtcResult rmtc_bruteforce(const TemporalGraph& g, Vertex root, int budget_edges = 20) {
    const int m = g.num_edges();
    if (m > budget_edges) throw BudgetError("rmtc_bruteforce: instance exceeds edge budget");
    if (root < 0 || root >= g.num_vertices()) throw DomainError("rmtc: bad root");
    if (!temporally_r_connected(g, root)) return {};

    const auto& es = g.edges();
    RmtcResult best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<TemporalEdge> subset;
        Rational w;
        for (int i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i)) {
                subset.push_back(es[i]);
                w += g.weight(es[i]);
            }
        if (best.feasible && best.total_weight < w) continue;
        TemporalGraph h(g.num_vertices(), g.lifetime(), subset);
        if (!temporally_r_connected(h, root)) continue;
        if (!best.feasible || w < best.total_weight ||
            (w == best.total_weight && subset < best.edges)) {
            best.feasible = true;
            best.total_weight = w;
            best.edges = subset;
        }
    }
    return best;
}

namespace detail {

// State of one bag vertex in the r-MTC DP. Arrival keys are (t, rank):
// `rank` breaks ties among equal arrival times of co-bagged vertices, which
// keeps the justification relation acyclic across non-strict same-time
// chains. The root r carries the special key (0,0) and needs no
// justification.
struct RmtcVertexState {
    TimeStep t = 0; // guessed arrival time; 0 = the root itself
    int rank = 0;   // position among same-t bag vertices
    bool justified = false;
};

inline bool operator<(const RmtcVertexState& a, const RmtcVertexState& b) {
    return std::tie(a.t, a.rank, a.justified) < std::tie(b.t, b.rank, b.justified);
}
inline bool operator==(const RmtcVertexState& a, const RmtcVertexState& b) {
    return std::tie(a.t, a.rank, a.justified) == std::tie(b.t, b.rank, b.justified);
}

struct RmtcEntry {
    Rational cost;
    std::vector<int> bought; // edge indices into g.edges(), sorted
};

inline bool rmtc_better(const RmtcEntry& a, const RmtcEntry& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.bought < b.bought;
}

inline bool key_less(const RmtcVertexState& a, const RmtcVertexState& b) {
    return std::tie(a.t, a.rank) < std::tie(b.t, b.rank);
}

// Re-normalize ranks so that, per arrival time, they are consecutive from 0
// while preserving relative order.
inline void normalize_ranks(std::vector<RmtcVertexState>& key) {
    std::map<TimeStep, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(key.size()); ++i) groups[key[i].t].push_back(i);
    for (auto& [t, members] : groups) {
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return key[a].rank < key[b].rank; });
        for (int pos = 0; pos < static_cast<int>(members.size()); ++pos)
            key[members[pos]].rank = pos;
    }
}

} // namespace detail

// r-MTC DP over a nice tree decomposition of the underlying graph, rooted so
// that r is forgotten last. Table rows assign each bag vertex a local-source
// flag and a start time, following the f(x | a_1,t_1,...) table shape; the
// extra rank component disambiguates equal start times.
inline RmtcResult rmtc_dp(const TemporalGraph& g, Vertex root, const TreeDecomposition& d) {
    const int n = g.num_vertices();
    if (root < 0 || root >= n) throw DomainError("rmtc: bad root");
    auto check = validate_tdc(g.underlying_graph(), d);
    if (!check.ok()) throw DomainError("rmtc_dp: invalid decomposition: " + check.detail);

    // Root the nice decomposition at a node whose bag contains r and forget
    // r last.
    int root_node = 0;
    for (int u = 0; u < d.num_nodes; ++u)
        if (std::binary_search(d.bags[u].begin(), d.bags[u].end(), root)) {
            root_node = u;
            break;
        }
    NiceTreeDecomposition nice = make_nice(d, root_node, root);

    const TimeStep tau = g.lifetime();
    const auto& es = g.edges();

    // Temporal edge indices per underlying edge.
    std::map<std::pair<Vertex, Vertex>, std::vector<int>> edge_ids;
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        edge_ids[{es[i].u, es[i].v}].push_back(i);

    using Key = std::vector<detail::RmtcVertexState>;
    using Table = std::map<Key, detail::RmtcEntry>;

    auto order = nice.postorder();
    std::vector<Table> tables(nice.nodes.size());

    auto upsert = [](Table& t, Key key, const detail::RmtcEntry& e) {
        auto [it, inserted] = t.try_emplace(std::move(key), e);
        if (!inserted && detail::rmtc_better(e, it->second)) it->second = e;
    };

    for (int x : order) {
        const auto& nd = nice.nodes[x];
        Table& table = tables[x];
        switch (nd.tag) {
            case NiceTag::Leaf:
                table[{}] = {Rational(0), {}};
                break;
            case NiceTag::Introduce: {
                const auto& child = tables[nd.child];
                const Bag& bag = nd.bag;
                const Vertex v = nd.vertex;
                const int pos = static_cast<int>(
                    std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
                for (const auto& [key, entry] : child) {
                    if (v == root) {
                        Key nk = key;
                        nk.insert(nk.begin() + pos, {0, 0, true});
                        upsert(table, std::move(nk), entry);
                        continue;
                    }
                    for (TimeStep t = 1; t <= tau; ++t) {
                        // Count same-t group members to enumerate insertion ranks.
                        int group = 0;
                        for (const auto& st : key)
                            if (st.t == t) ++group;
                        for (int q = 0; q <= group; ++q) {
                            Key nk = key;
                            for (auto& st : nk)
                                if (st.t == t && st.rank >= q) ++st.rank;
                            nk.insert(nk.begin() + pos, {t, q, false});
                            upsert(table, std::move(nk), entry);
                        }
                    }
                }
                break;
            }
            case NiceTag::Forget: {
                const auto& child = tables[nd.child];
                const Bag& child_bag = nice.nodes[nd.child].bag;
                const Vertex v = nd.vertex;
                const int pos = static_cast<int>(
                    std::lower_bound(child_bag.begin(), child_bag.end(), v) - child_bag.begin());

                for (const auto& [key, entry] : child) {
                    const auto& vst = key[pos];
                    // Candidate edges between v and remaining bag vertices;
                    // these have their unique processing point here.
                    // Mandatory: justify v now if still unjustified.
                    std::vector<std::pair<Rational, int>> v_candidates; // (weight, edge id)
                    // Optional: justify a remaining vertex u via a v-edge.
                    std::vector<std::pair<int, int>> u_options; // (bag pos in child, edge id)
                    for (std::size_t i = 0; i < child_bag.size(); ++i) {
                        if (static_cast<int>(i) == pos) continue;
                        const Vertex u = child_bag[i];
                        auto it = edge_ids.find(std::minmax(u, v));
                        if (it == edge_ids.end()) continue;
                        const auto& ust = key[i];
                        for (int id : it->second) {
                            const TimeStep t = es[id].t;
                            if (!vst.justified && t == vst.t && detail::key_less(ust, vst))
                                v_candidates.push_back({g.weight(es[id]), id});
                            if (!ust.justified && t == ust.t && detail::key_less(vst, ust))
                                u_options.push_back({static_cast<int>(i), id});
                        }
                    }

                    // Choose v's justification (cheapest, tie by edge id).
                    std::optional<std::pair<Rational, int>> v_buy;
                    if (!vst.justified) {
                        if (v_candidates.empty()) continue; // state dies
                        std::sort(v_candidates.begin(), v_candidates.end(),
                                  [](const auto& a, const auto& b) {
                                      return a.first != b.first ? a.first < b.first
                                                                : a.second < b.second;
                                  });
                        v_buy = v_candidates.front();
                    }

                    // Cheapest option per still-unjustified bag vertex.
                    std::map<int, int> best_u_edge; // bag pos -> edge id
                    for (const auto& [i, id] : u_options) {
                        auto it2 = best_u_edge.find(i);
                        if (it2 == best_u_edge.end() ||
                            g.weight(es[id]) < g.weight(es[it2->second]) ||
                            (g.weight(es[id]) == g.weight(es[it2->second]) && id < it2->second))
                            best_u_edge[i] = id;
                    }
                    std::vector<std::pair<int, int>> opts(best_u_edge.begin(), best_u_edge.end());

                    // Branch over subsets of optional justifications.
                    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << opts.size()); ++mask) {
                        Key nk;
                        nk.reserve(key.size() - 1);
                        for (std::size_t i = 0; i < key.size(); ++i)
                            if (static_cast<int>(i) != pos) nk.push_back(key[i]);
                        detail::RmtcEntry ne = entry;
                        auto buy = [&](int id) {
                            ne.cost += g.weight(es[id]);
                            ne.bought.insert(
                                std::lower_bound(ne.bought.begin(), ne.bought.end(), id), id);
                        };
                        if (v_buy) buy(v_buy->second);
                        for (std::size_t oi = 0; oi < opts.size(); ++oi)
                            if (mask & (std::uint64_t{1} << oi)) {
                                int i = opts[oi].first;
                                buy(opts[oi].second);
                                nk[i > pos ? i - 1 : i].justified = true;
                            }
                        detail::normalize_ranks(nk);
                        upsert(table, std::move(nk), ne);
                    }
                }
                break;
            }
            case NiceTag::Join: {
                const auto& left = tables[nd.child];
                const auto& right = tables[nd.child2];
                // Match on (t, rank) projections; justified flags combine by OR.
                std::map<std::vector<std::pair<TimeStep, int>>, std::vector<const std::pair<const Key, detail::RmtcEntry>*>>
                    right_by_proj;
                auto proj = [](const Key& k) {
                    std::vector<std::pair<TimeStep, int>> p;
                    p.reserve(k.size());
                    for (const auto& st : k) p.push_back({st.t, st.rank});
                    return p;
                };
                for (const auto& kv : right) right_by_proj[proj(kv.first)].push_back(&kv);
                for (const auto& [lkey, le] : left) {
                    auto it = right_by_proj.find(proj(lkey));
                    if (it == right_by_proj.end()) continue;
                    for (const auto* rkv : it->second) {
                        const auto& [rkey, re] = *rkv;
                        Key nk = lkey;
                        for (std::size_t i = 0; i < nk.size(); ++i)
                            nk[i].justified = lkey[i].justified || rkey[i].justified;
                        detail::RmtcEntry ne;
                        ne.cost = le.cost + re.cost;
                        ne.bought.resize(le.bought.size() + re.bought.size());
                        auto end = std::set_union(le.bought.begin(), le.bought.end(),
                                                  re.bought.begin(), re.bought.end(),
                                                  ne.bought.begin());
                        ne.bought.erase(end, ne.bought.end());
                        upsert(table, std::move(nk), ne);
                    }
                }
                break;
            }
        }
        if (nd.child >= 0) tables[nd.child].clear();
        if (nd.child2 >= 0) tables[nd.child2].clear();
    }

    const Table& root_table = tables[nice.root];
    auto it = root_table.find({});
    if (it == root_table.end()) return {};
    RmtcResult r;
    r.feasible = true;
    r.total_weight = it->second.cost;
    for (int id : it->second.bought) r.edges.push_back(es[id]);
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

// ===========================================================================
// Delta-Temporal Matching
// ===========================================================================

struct MatchingResult {
    std::vector<TemporalEdge> matching; // sorted
    bool exact = true;                  // false when the greedy fallback ran
};

namespace detail {

// Max independent set by branching on a max-degree vertex; fine for the
// line-graph sizes the exact matcher accepts.
struct MisSolver {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::uint64_t best_set = 0;
    int best = -1;

    void solve(std::uint64_t alive, std::uint64_t chosen, int count) {
        if (count + popcount(alive) <= best) return;
        if (!alive) {
            if (count > best) {
                best = count;
                best_set = chosen;
            }
            return;
        }
        int v = -1, dmax = -1;
        for (std::uint64_t rest = alive; rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            int deg = popcount(adj[w] & alive);
            if (deg > dmax) { dmax = deg; v = w; }
        }
        if (dmax == 0) {
            // Edgeless remainder: take everything.
            int total = count + popcount(alive);
            if (total > best) {
                best = total;
                best_set = chosen | alive;
            }
            return;
        }
        // Include v, drop its closed neighborhood.
        solve(alive & ~(adj[v] | (std::uint64_t{1} << v)), chosen | (std::uint64_t{1} << v), count + 1);
        // Exclude v.
        solve(alive & ~(std::uint64_t{1} << v), chosen, count);
    }
};

} // namespace detail

inline bool matching_pair_ok(const TemporalEdge& a, const TemporalEdge& b, int delta) {
    const bool disjoint = !(a.touches(b.u) || a.touches(b.v));
    return disjoint || std::abs(a.t - b.t) >= delta;
}

// Maximum delta-temporal matching as a maximum independent set of the
// delta-temporal line graph.
inline MatchingResult matching_exact(const TemporalGraph& g, int delta, int budget_edges = 30) {
    const int m = g.num_edges();
    if (m > budget_edges) {
        // Greedy fallback in canonical edge order, flagged as inexact.
        MatchingResult r;
        r.exact = false;
        for (const auto& e : g.edges()) {
            bool ok = true;
            for (const auto& f : r.matching)
                if (!matching_pair_ok(e, f, delta)) { ok = false; break; }
            if (ok) r.matching.push_back(e);
        }
        std::sort(r.matching.begin(), r.matching.end());
        return r;
    }
    StaticGraph lg = delta_temporal_line_graph(g, delta);
    detail::MisSolver mis;
    mis.n = m;
    mis.adj.assign(m, 0);
    for (const auto& [a, b] : lg.edges()) {
        mis.adj[a] |= std::uint64_t{1} << b;
        mis.adj[b] |= std::uint64_t{1} << a;
    }
    mis.solve(m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1), 0, 0);
    MatchingResult r;
    for (int i = 0; i < m; ++i)
        if (mis.best_set & (std::uint64_t{1} << i)) r.matching.push_back(g.edges()[i]);
    std::sort(r.matching.begin(), r.matching.end());
    return r;
}

// ===========================================================================
// (alpha,beta)-Temporal Reachability Time-Edge Deletion
// ===========================================================================

struct TrtedResult {
    bool feasible = false;
    std::vector<TemporalEdge> deleted; // sorted
};

inline int max_strict_path_reach(const TemporalGraph& g, int alpha, int beta) {
    int best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        best = std::max(best, static_cast<int>(reachable_set_strict_paths(g, v, alpha, beta).size()));
    return best;
}

// Deletion set of at most k temporal edges bringing every vertex's strict
// (alpha,beta)-path reach down to h, by subset enumeration. The problem is
// stated over paths, not walks (see reachable_set_strict_paths). Deleted
// subsets are carried as bitmasks so the inner reach check allocates
// nothing.
inline TrtedResult trted_bruteforce(const TemporalGraph& g, int alpha, int beta, int k, int h,
                                    std::uint64_t combination_budget = 5'000'000) {
    const int m = g.num_edges();
    const int n = g.num_vertices();
    if (m > 62) throw BudgetError("trted_bruteforce: too many temporal edges");
    {
        long double total = 0, c = 1;
        for (int i = 0; i <= std::min(k, m); ++i) {
            total += c;
            c = c * (m - i) / (i + 1);
        }
        if (total > static_cast<long double>(combination_budget))
            throw BudgetError("trted_bruteforce: combination budget exceeded");
    }
    const auto& es = g.edges();
    std::vector<std::vector<int>> incident(n);
    for (int i = 0; i < m; ++i) {
        incident[es[i].u].push_back(i);
        incident[es[i].v].push_back(i);
    }
    const int gap_floor = std::max(alpha, 1);

    std::vector<char> on_path(n, 0), reached(n, 0);
    auto dfs_mark = [&](auto&& self, Vertex v, TimeStep t, bool first,
                        std::uint64_t deleted) -> void {
        for (int ei : incident[v]) {
            if (deleted & (std::uint64_t{1} << ei)) continue;
            const auto& e = es[ei];
            Vertex w = e.other(v);
            if (on_path[w]) continue;
            if (!first) {
                const int gap = e.t - t;
                if (gap < gap_floor || gap > beta) continue;
            }
            reached[w] = 1;
            on_path[w] = 1;
            self(self, w, e.t, false, deleted);
            on_path[w] = 0;
        }
    };

    auto all_sources_ok = [&](std::uint64_t deleted) {
        for (Vertex src = 0; src < n; ++src) {
            std::fill(reached.begin(), reached.end(), 0);
            reached[src] = 1;
            on_path[src] = 1;
            dfs_mark(dfs_mark, src, 0, true, deleted);
            on_path[src] = 0;
            int cnt = 0;
            for (char c : reached) cnt += c;
            if (cnt > h) return false;
        }
        return true;
    };

    for (int size = 0; size <= std::min(k, m); ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            std::uint64_t deleted = 0;
            for (int i : comb) deleted |= std::uint64_t{1} << i;
            if (all_sources_ok(deleted)) {
                TrtedResult r;
                r.feasible = true;
                for (int i : comb) r.deleted.push_back(es[i]);
                std::sort(r.deleted.begin(), r.deleted.end());
                return r;
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == m - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return {};
}

// ===========================================================================
// Temporal Graph Exploration
// ===========================================================================

struct ExplorationMove {
    TimeStep time = 0;
    bool traverse = false;
    TemporalEdge edge; // meaningful when traverse
};

struct ExplorationSchedule {
    Vertex start = 0;
    std::vector<ExplorationMove> moves; // one entry per time step 1..horizon
};

struct ScheduleReplay {
    bool valid = false;
    std::string error;
    Vertex final_vertex = -1;
    std::vector<char> visited;
    int traversals = 0;
    TimeStep last_traversal_time = 0;
};

// Replays a schedule against the graph: every traversal must use an edge
// present at its time step, times strictly increase, moves chain.
inline ScheduleReplay replay_schedule(const TemporalGraph& g, const ExplorationSchedule& sched) {
    ScheduleReplay r;
    r.visited.assign(g.num_vertices(), 0);
    if (sched.start < 0 || sched.start >= g.num_vertices()) {
        r.error = "start vertex out of range";
        return r;
    }
    Vertex cur = sched.start;
    r.visited[cur] = 1;
    TimeStep prev = 0;
    for (const auto& mv : sched.moves) {
        if (mv.time <= prev) {
            r.error = "time steps must strictly increase";
            return r;
        }
        prev = mv.time;
        if (!mv.traverse) continue;
        if (mv.time > g.lifetime()) {
            r.error = "move after lifetime";
            return r;
        }
        if (mv.edge.t != mv.time || !g.has_edge(mv.edge.u, mv.edge.v, mv.edge.t)) {
            r.error = "traversal uses an edge absent at its time step";
            return r;
        }
        if (!mv.edge.touches(cur)) {
            r.error = "traversal does not start at the current vertex";
            return r;
        }
        cur = mv.edge.other(cur);
        r.visited[cur] = 1;
        ++r.traversals;
        r.last_traversal_time = mv.time;
    }
    r.valid = true;
    r.final_vertex = cur;
    return r;
}

inline bool schedule_explores_all(const TemporalGraph& g, const ExplorationSchedule& sched,
                                  bool return_to_base) {
    auto r = replay_schedule(g, sched);
    if (!r.valid) return false;
    for (char c : r.visited)
        if (!c) return false;
    return !return_to_base || r.final_vertex == sched.start;
}

// Exhaustive search over (vertex, visited set, time) states for a strict
// exploration walk, optionally returning to base.
inline std::optional<ExplorationSchedule> explore_bruteforce(const TemporalGraph& g, Vertex s,
                                                             bool return_to_base,
                                                             std::uint64_t state_budget = 10'000'000) {
    const int n = g.num_vertices();
    if (s < 0 || s >= n) throw DomainError("explore: bad start vertex");
    if (n > 20) throw BudgetError("explore_bruteforce: vertex budget exceeded");
    const TimeStep tau = g.lifetime();
    const std::uint64_t states =
        static_cast<std::uint64_t>(n) * (std::uint64_t{1} << n) * (tau + 1);
    if (states > state_budget) throw BudgetError("explore_bruteforce: state budget exceeded");

    std::vector<std::vector<int>> incident(n);
    const auto& es = g.edges();
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        incident[es[i].u].push_back(i);
        incident[es[i].v].push_back(i);
    }
    // Last stamp incident to each vertex; a state whose clock has passed an
    // unvisited vertex's final edge is dead.
    std::vector<TimeStep> last_stamp(n, 0);
    for (const auto& e : es) {
        last_stamp[e.u] = std::max(last_stamp[e.u], e.t);
        last_stamp[e.v] = std::max(last_stamp[e.v], e.t);
    }

    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    auto pack = [&](Vertex v, std::uint64_t vis, TimeStep t) {
        return (vis * n + static_cast<std::uint64_t>(v)) * (tau + 1) + t;
    };
    constexpr std::uint64_t kUnseen = ~std::uint64_t{0};
    std::vector<std::uint64_t> parent(states, kUnseen);
    std::vector<std::int32_t> via(states, -1);
    std::vector<std::uint64_t> queue;
    const std::uint64_t start_key = pack(s, std::uint64_t{1} << s, 0);
    parent[start_key] = start_key;
    queue.push_back(start_key);

    auto unpack = [&](std::uint64_t key) {
        TimeStep t = static_cast<TimeStep>(key % (tau + 1));
        key /= (tau + 1);
        Vertex v = static_cast<Vertex>(key % n);
        std::uint64_t vis = key / n;
        return std::tuple<Vertex, std::uint64_t, TimeStep>(v, vis, t);
    };

    std::optional<std::uint64_t> goal;
    for (std::size_t qi = 0; qi < queue.size() && !goal; ++qi) {
        auto [v, vis, t] = unpack(queue[qi]);
        if (vis == full && (!return_to_base || v == s)) {
            goal = queue[qi];
            break;
        }
        bool dead = false;
        for (std::uint64_t rest = full & ~vis; rest;) {
            Vertex w = std::countr_zero(rest);
            rest &= rest - 1;
            if (last_stamp[w] <= t) { dead = true; break; }
        }
        if (dead) continue;
        for (int ei : incident[v]) {
            const auto& e = es[ei];
            if (e.t <= t) continue;
            Vertex w = e.other(v);
            std::uint64_t nvis = vis | (std::uint64_t{1} << w);
            std::uint64_t key = pack(w, nvis, e.t);
            if (parent[key] != kUnseen) continue;
            parent[key] = queue[qi];
            via[key] = ei;
            queue.push_back(key);
            if (nvis == full && (!return_to_base || w == s)) {
                goal = key;
                break;
            }
        }
    }
    if (!goal) return std::nullopt;

    std::vector<TemporalEdge> path;
    std::uint64_t cur = *goal;
    while (cur != start_key) {
        path.push_back(es[via[cur]]);
        cur = parent[cur];
    }
    std::reverse(path.begin(), path.end());

    ExplorationSchedule sched;
    sched.start = s;
    TimeStep horizon = path.empty() ? 0 : path.back().t;
    std::size_t next = 0;
    for (TimeStep t = 1; t <= horizon; ++t) {
        ExplorationMove mv;
        mv.time = t;
        if (next < path.size() && path[next].t == t) {
            mv.traverse = true;
            mv.edge = path[next++];
        }
        sched.moves.push_back(mv);
    }
    return sched;
}

// Constructive exploration for always-connected instances: repeatedly walk
// to the nearest unvisited vertex (smallest id among ties), which takes at
// most n-1 time steps per target when every layer is connected.
inline ExplorationSchedule explore_connected(const TemporalGraph& g, Vertex s) {
    const int n = g.num_vertices();
    if (s < 0 || s >= n) throw DomainError("explore: bad start vertex");
    for (TimeStep t = 1; t <= g.lifetime(); ++t)
        if (!g.layer(t).connected())
            throw DomainError("explore_connected: layer " + std::to_string(t) + " is not connected");
    if (g.lifetime() < static_cast<long long>(n) * (n - 1))
        throw DomainError("explore_connected: lifetime below n*(n-1)");

    std::vector<std::vector<TemporalEdge>> at_time(g.lifetime() + 1);
    for (const auto& e : g.edges()) at_time[e.t].push_back(e);

    ExplorationSchedule sched;
    sched.start = s;
    std::vector<char> visited(n, 0);
    visited[s] = 1;
    int remaining = n - 1;
    Vertex cur = s;
    TimeStep now = 0;

    while (remaining > 0) {
        // Earliest-arrival search from (cur, now): one layer hop per step.
        std::vector<TimeStep> arrival(n, -1);
        std::vector<TemporalEdge> via(n, TemporalEdge(0, 1, 1));
        std::vector<Vertex> from(n, -1);
        arrival[cur] = now;
        Vertex found = -1;
        for (TimeStep t = now + 1; t <= g.lifetime() && found < 0; ++t) {
            for (const auto& e : at_time[t]) {
                for (int dir = 0; dir < 2; ++dir) {
                    Vertex a = dir ? e.v : e.u, b = dir ? e.u : e.v;
                    if (arrival[a] >= 0 && arrival[a] < t && arrival[b] < 0) {
                        arrival[b] = t;
                        via[b] = e;
                        from[b] = a;
                    }
                }
            }
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v)
                if (!visited[v] && arrival[v] == t && (best < 0 || v < best)) best = v;
            if (best >= 0) found = best;
        }
        if (found < 0)
            throw DomainError("explore_connected: lifetime exhausted before full exploration");

        // Reconstruct the walk to `found` and append it.
        std::vector<TemporalEdge> hops;
        for (Vertex v = found; v != cur; v = from[v]) hops.push_back(via[v]);
        std::reverse(hops.begin(), hops.end());
        for (const auto& e : hops) {
            for (TimeStep t = now + 1; t < e.t; ++t) sched.moves.push_back({t, false, {}});
            sched.moves.push_back({e.t, true, e});
            now = e.t;
            cur = e.other(cur);
            if (!visited[cur]) {
                visited[cur] = 1;
                --remaining;
            }
        }
    }
    return sched;
}

} // namespace tempo
