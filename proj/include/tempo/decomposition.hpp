#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tempo/temporal_graph.hpp"

namespace tempo {

using Bag = std::vector<Vertex>; // sorted, unique

// Tree plus bags over graph vertices (Def. 1 object).
struct TreeDecomposition {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<Bag> bags;
    std::optional<int> root;

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

    static TreeDecomposition single_bag(Bag bag) {
        TreeDecomposition d;
        d.num_nodes = 1;
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        d.bags.push_back(std::move(bag));
        return d;
    }
};

struct TdcValidation {
    bool structure_ok = false;     // node ids sane, tree connected and acyclic
    bool vertices_covered = false; // (i)
    bool edges_covered = false;    // (ii)
    bool occurrences_connected = false; // (iii)
    std::string detail;            // witness description on failure

    bool ok() const { return structure_ok && vertices_covered && edges_covered && occurrences_connected; }
};

inline bool is_tree(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
    if (num_nodes == 0) return false;
    if (static_cast<int>(edges.size()) != num_nodes - 1) return false;
    std::vector<std::vector<int>> adj(num_nodes);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= num_nodes || b < 0 || b >= num_nodes || a == b) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(num_nodes, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) { seen[w] = 1; ++cnt; stack.push_back(w); }
    }
    return cnt == num_nodes;
}

// Checks Def. 1 conditions (i)-(iii) and reports a witness on failure.
inline TdcValidation validate_tdc(const StaticGraph& g, const TreeDecomposition& d) {
    TdcValidation r;
    if (!is_tree(d.num_nodes, d.tree_edges) || static_cast<int>(d.bags.size()) != d.num_nodes) {
        r.detail = "decomposition tree is not a tree";
        return r;
    }
    for (const auto& bag : d.bags) {
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
            r.detail = "bag is not sorted/unique";
            return r;
        }
        for (Vertex v : bag)
            if (v < 0 || v >= g.num_vertices()) {
                r.detail = "bag contains vertex outside graph";
                return r;
            }
    }
    r.structure_ok = true;

    const int n = g.num_vertices();
    std::vector<char> covered(n, 0);
    for (const auto& bag : d.bags)
        for (Vertex v : bag) covered[v] = 1;
    r.vertices_covered = true;
    for (Vertex v = 0; v < n; ++v)
        if (!covered[v]) {
            r.vertices_covered = false;
            r.detail = "vertex " + std::to_string(v) + " appears in no bag";
            break;
        }

    r.edges_covered = true;
    for (const auto& [a, b] : g.edges()) {
        bool found = false;
        for (const auto& bag : d.bags)
            if (std::binary_search(bag.begin(), bag.end(), a) &&
                std::binary_search(bag.begin(), bag.end(), b)) {
                found = true;
                break;
            }
        if (!found) {
            r.edges_covered = false;
            if (r.detail.empty())
                r.detail = "edge {" + std::to_string(a) + "," + std::to_string(b) + "} covered by no bag";
            break;
        }
    }

    r.occurrences_connected = true;
    auto adj = d.node_adjacency();
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> holders;
        for (int u = 0; u < d.num_nodes; ++u)
            if (std::binary_search(d.bags[u].begin(), d.bags[u].end(), v)) holders.push_back(u);
        if (holders.size() <= 1) continue;
        std::vector<char> in_set(d.num_nodes, 0);
        for (int u : holders) in_set[u] = 1;
        std::vector<int> stack{holders[0]};
        std::vector<char> seen(d.num_nodes, 0);
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
                r.detail = "occurrences of vertex " + std::to_string(v) + " are disconnected";
            break;
        }
    }
    return r;
}

// --- nice tree decompositions ----------------------------------------------

enum class NiceTag { Leaf, Introduce, Forget, Join };

struct NiceNode {
    Bag bag;
    NiceTag tag = NiceTag::Leaf;
    Vertex vertex = -1; // introduced/forgotten vertex for those tags
    int child = -1;     // single child (introduce/forget)
    int child2 = -1;    // second child (join)
};

// Rooted nice decomposition; root and leaf bags are empty, which keeps the
// DP boundary conditions trivial.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const {
        int w = -1;
        for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
        return w;
    }

    TreeDecomposition to_tree_decomposition() const {
        TreeDecomposition d;
        d.num_nodes = static_cast<int>(nodes.size());
        d.root = root;
        for (int i = 0; i < d.num_nodes; ++i) {
            d.bags.push_back(nodes[i].bag);
            if (nodes[i].child >= 0) d.tree_edges.push_back({i, nodes[i].child});
            if (nodes[i].child2 >= 0) d.tree_edges.push_back({i, nodes[i].child2});
        }
        return d;
    }

    // Children order: post-order traversal indices are not guaranteed; use
    // this to iterate bottom-up.
    std::vector<int> postorder() const {
        std::vector<int> order;
        std::vector<std::pair<int, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [v, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                order.push_back(v);
                continue;
            }
            stack.push_back({v, true});
            if (nodes[v].child >= 0) stack.push_back({nodes[v].child, false});
            if (nodes[v].child2 >= 0) stack.push_back({nodes[v].child2, false});
        }
        return order;
    }
};

// Checks the tag grammar of a nice decomposition.
inline bool validate_nice(const NiceTreeDecomposition& d, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (d.root < 0 || d.root >= static_cast<int>(d.nodes.size())) return fail("bad root");
    if (!d.nodes[d.root].bag.empty()) return fail("root bag not empty");
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
        const auto& nd = d.nodes[i];
        switch (nd.tag) {
            case NiceTag::Leaf:
                if (nd.child >= 0 || nd.child2 >= 0) return fail("leaf with children");
                if (!nd.bag.empty()) return fail("leaf bag not empty");
                break;
            case NiceTag::Introduce: {
                if (nd.child < 0 || nd.child2 >= 0) return fail("introduce needs one child");
                Bag expect = d.nodes[nd.child].bag;
                expect.insert(std::lower_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
                if (expect != nd.bag) return fail("introduce bag mismatch");
                if (std::binary_search(d.nodes[nd.child].bag.begin(), d.nodes[nd.child].bag.end(), nd.vertex))
                    return fail("introduced vertex already present");
                break;
            }
            case NiceTag::Forget: {
                if (nd.child < 0 || nd.child2 >= 0) return fail("forget needs one child");
                Bag expect = d.nodes[nd.child].bag;
                auto it = std::lower_bound(expect.begin(), expect.end(), nd.vertex);
                if (it == expect.end() || *it != nd.vertex) return fail("forgotten vertex missing");
                expect.erase(it);
                if (expect != nd.bag) return fail("forget bag mismatch");
                break;
            }
            case NiceTag::Join:
                if (nd.child < 0 || nd.child2 < 0) return fail("join needs two children");
                if (d.nodes[nd.child].bag != nd.bag || d.nodes[nd.child2].bag != nd.bag)
                    return fail("join bags differ");
                break;
        }
    }
    return true;
}

namespace detail {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NiceNode nd) {
        nodes.push_back(std::move(nd));
        return static_cast<int>(nodes.size()) - 1;
    }

    // Chain from an empty leaf introducing `target` one vertex at a time.
    int build_leaf_chain(const Bag& target) {
        int cur = add({{}, NiceTag::Leaf, -1, -1, -1});
        Bag bag;
        for (Vertex v : target) {
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            cur = add({bag, NiceTag::Introduce, v, cur, -1});
        }
        return cur;
    }

    // Adapter from bag(cur) to `target`: forget extras, then introduce news.
    int morph(int cur, const Bag& target) {
        Bag bag = nodes[cur].bag;
        for (Vertex v : Bag(bag)) {
            if (!std::binary_search(target.begin(), target.end(), v)) {
                bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
                cur = add({bag, NiceTag::Forget, v, cur, -1});
            }
        }
        for (Vertex v : target) {
            if (!std::binary_search(bag.begin(), bag.end(), v)) {
                bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
                cur = add({bag, NiceTag::Introduce, v, cur, -1});
            }
        }
        return cur;
    }
};

} // namespace detail

// Converts a valid tree decomposition into nice form of the same width.
// `root_at` picks the input node whose bag ends up at the top;
// `forget_last` (if in that bag) is the final vertex forgotten below the
// empty root.
inline NiceTreeDecomposition make_nice(const TreeDecomposition& d,
                                       std::optional<int> root_at = std::nullopt,
                                       std::optional<Vertex> forget_last = std::nullopt) {
    if (!is_tree(d.num_nodes, d.tree_edges) || static_cast<int>(d.bags.size()) != d.num_nodes)
        throw DomainError("make_nice: input decomposition is not a tree");
    const int root_node = root_at.value_or(d.root.value_or(0));
    auto adj = d.node_adjacency();

    detail::NiceBuilder b;
    // Iterative post-order over the input tree.
    std::vector<int> parent(d.num_nodes, -1);
    std::vector<int> order;
    {
        std::vector<int> stack{root_node};
        std::vector<char> seen(d.num_nodes, 0);
        seen[root_node] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) { seen[w] = 1; parent[w] = v; stack.push_back(w); }
        }
    }
    std::vector<int> built(d.num_nodes, -1); // top nice node realizing bag of input node
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<int> child_tops;
        for (int w : adj[v])
            if (parent[w] == v) child_tops.push_back(b.morph(built[w], d.bags[v]));
        if (child_tops.empty()) {
            built[v] = b.build_leaf_chain(d.bags[v]);
        } else {
            int cur = child_tops[0];
            for (std::size_t i = 1; i < child_tops.size(); ++i)
                cur = b.add({d.bags[v], NiceTag::Join, -1, cur, child_tops[i]});
            built[v] = cur;
        }
    }

    // Forget the top bag down to the empty root.
    int cur = built[root_node];
    Bag bag = b.nodes[cur].bag;
    Bag final_order = bag;
    if (forget_last && std::binary_search(bag.begin(), bag.end(), *forget_last)) {
        final_order.erase(std::lower_bound(final_order.begin(), final_order.end(), *forget_last));
        final_order.push_back(*forget_last);
    }
    for (Vertex v : final_order) {
        bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
        cur = b.add({bag, NiceTag::Forget, v, cur, -1});
    }
    NiceTreeDecomposition nice;
    nice.nodes = std::move(b.nodes);
    nice.root = cur;
    return nice;
}

// --- treewidth computation ---------------------------------------------------

namespace detail {

// Adjacency as bitmasks; exact solver is capped at 64 vertices structurally.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    static MaskGraph from(const StaticGraph& g) {
        if (g.num_vertices() > 64) throw BudgetError("mask graph limited to 64 vertices");
        MaskGraph m;
        m.n = g.num_vertices();
        m.adj.assign(m.n, 0);
        for (const auto& [a, b] : g.edges()) {
            m.adj[a] |= std::uint64_t{1} << b;
            m.adj[b] |= std::uint64_t{1} << a;
        }
        return m;
    }
};

inline int popcount(std::uint64_t x) { return std::popcount(x); }

// Max-min-degree (degeneracy) lower bound for treewidth of the graph
// induced by `alive` under adjacency `adj`.
inline int mmd_lower_bound(int n, const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
    int best = 0;
    std::uint64_t rem = alive;
    while (rem) {
        int min_v = -1, min_d = std::numeric_limits<int>::max();
        for (std::uint64_t rest = rem; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int dv = popcount(adj[v] & rem);
            if (dv < min_d) { min_d = dv; min_v = v; }
        }
        best = std::max(best, min_d);
        rem &= ~(std::uint64_t{1} << min_v);
    }
    return best;
}

// Min-fill elimination order; ties broken by lowest vertex id.
inline std::pair<int, std::vector<Vertex>> minfill_order(const MaskGraph& g) {
    std::vector<std::uint64_t> adj(g.adj);
    std::uint64_t rem = g.n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    std::vector<Vertex> order;
    int width = -1;
    for (int step = 0; step < g.n; ++step) {
        int best_v = -1;
        long best_fill = std::numeric_limits<long>::max();
        for (int v = 0; v < g.n; ++v) {
            if (!(rem & (std::uint64_t{1} << v))) continue;
            std::uint64_t nb = adj[v] & rem;
            long fill = 0;
            for (std::uint64_t rest = nb; rest;) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                fill += popcount(nb & ~adj[w] & ~(std::uint64_t{1} << w));
            }
            fill /= 2;
            if (fill < best_fill) { best_fill = fill; best_v = v; }
        }
        std::uint64_t nb = adj[best_v] & rem;
        width = std::max(width, popcount(nb));
        for (std::uint64_t rest = nb; rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            adj[w] |= nb & ~(std::uint64_t{1} << w);
        }
        rem &= ~(std::uint64_t{1} << best_v);
        order.push_back(best_v);
    }
    return {std::max(width, 0), order};
}

// Builds a tree decomposition from an elimination order (bag of v = closed
// neighborhood of v at elimination time in the fill-in graph).
inline TreeDecomposition decomposition_from_order(const StaticGraph& g, const std::vector<Vertex>& order) {
    MaskGraph m = MaskGraph::from(g);
    const int n = g.num_vertices();
    std::vector<std::uint64_t> adj(m.adj);
    std::uint64_t rem = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    TreeDecomposition d;
    d.num_nodes = n;
    d.bags.resize(n);
    std::vector<std::uint64_t> bag_mask(n, 0);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::uint64_t nb = adj[v] & rem;
        bag_mask[i] = nb | (std::uint64_t{1} << v);
        for (std::uint64_t rest = nb; rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            adj[w] |= nb & ~(std::uint64_t{1} << w);
        }
        rem &= ~(std::uint64_t{1} << v);
    }
    for (int i = 0; i < n; ++i) {
        for (std::uint64_t rest = bag_mask[i]; rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            d.bags[i].push_back(w);
        }
        std::uint64_t later = bag_mask[i] & ~(std::uint64_t{1} << order[i]);
        if (later) {
            int first = -1;
            for (std::uint64_t rest = later; rest;) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                if (first == -1 || pos[w] < pos[first]) first = w;
            }
            d.tree_edges.push_back({i, pos[first]});
        } else if (i + 1 < n) {
            d.tree_edges.push_back({i, i + 1});
        }
    }
    if (n == 0) {
        d.num_nodes = 1;
        d.bags.assign(1, {});
    }
    return d;
}

struct BnbState {
    const MaskGraph* base = nullptr;
    int best_width = 0;
    std::vector<Vertex> best_order;
    std::unordered_map<std::uint64_t, int> memo; // eliminated mask -> best max reached

    std::vector<std::uint64_t> adj;
    std::vector<Vertex> cur_order;

    void search(std::uint64_t eliminated, int cur_max) {
        const int n = base->n;
        std::uint64_t rem = (n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)) & ~eliminated;
        if (!rem) {
            if (cur_max < best_width) {
                best_width = cur_max;
                best_order = cur_order;
            }
            return;
        }
        if (cur_max >= best_width) return; // cannot strictly improve
        auto it = memo.find(eliminated);
        if (it != memo.end() && it->second <= cur_max) return;
        memo[eliminated] = cur_max;

        // Remaining graph is a clique: finish in any order.
        int r = popcount(rem);
        bool clique = true;
        for (std::uint64_t rest = rem; rest && clique;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (popcount(adj[v] & rem) != r - 1) clique = false;
        }
        if (clique) {
            int width = std::max(cur_max, r - 1);
            if (width < best_width) {
                best_width = width;
                best_order = cur_order;
                for (std::uint64_t rest = rem; rest;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    best_order.push_back(v);
                }
            }
            return;
        }
        const int rem_lb = mmd_lower_bound(base->n, adj, rem);
        if (std::max(cur_max, rem_lb) >= best_width) return;

        // Forced moves: simplicial vertices are always safe; almost-
        // simplicial ones (one non-clique neighbor pair) are safe while
        // their degree stays below the remaining graph's lower bound.
        for (std::uint64_t rest = rem; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t nb = adj[v] & rem;
            int missing = 0;
            for (std::uint64_t r2 = nb; r2 && missing <= 2;) {
                int w = std::countr_zero(r2);
                r2 &= r2 - 1;
                missing += popcount(nb & ~adj[w] & ~(std::uint64_t{1} << w));
            }
            if (missing == 0 || (missing == 2 && popcount(nb) <= rem_lb)) {
                eliminate_and_recurse(v, eliminated, cur_max);
                return;
            }
        }

        // Branch over candidates, cheapest fill first.
        std::vector<std::pair<long, int>> cands;
        for (std::uint64_t rest = rem; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t nb = adj[v] & rem;
            long fill = 0;
            for (std::uint64_t r2 = nb; r2;) {
                int w = std::countr_zero(r2);
                r2 &= r2 - 1;
                fill += popcount(nb & ~adj[w] & ~(std::uint64_t{1} << w));
            }
            cands.push_back({(fill / 2) * 64 + popcount(nb), v});
        }
        std::sort(cands.begin(), cands.end());
        for (const auto& [key, v] : cands) eliminate_and_recurse(v, eliminated, cur_max);
    }

    void eliminate_and_recurse(int v, std::uint64_t eliminated, int cur_max) {
        const int n = base->n;
        std::uint64_t rem = (n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)) & ~eliminated;
        std::uint64_t nb = adj[v] & rem;
        int deg = popcount(nb);
        if (std::max(cur_max, deg) >= best_width) return;

        std::vector<std::pair<int, std::uint64_t>> undo;
        for (std::uint64_t rest = nb; rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t add = nb & ~adj[w] & ~(std::uint64_t{1} << w);
            if (add) {
                undo.push_back({w, adj[w]});
                adj[w] |= add;
            }
        }
        cur_order.push_back(v);
        search(eliminated | (std::uint64_t{1} << v), std::max(cur_max, deg));
        cur_order.pop_back();
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) adj[it->first] = it->second;
    }
};

} // namespace detail

// Minimum-width decomposition by branch and bound over elimination orders
// (min-fill upper bound, degeneracy lower bound, simplicial reductions).
inline std::pair<int, TreeDecomposition> treewidth_exact(const StaticGraph& g, int budget = 25) {
    const int n = g.num_vertices();
    if (n > budget)
        throw BudgetError("treewidth_exact: graph has " + std::to_string(n) +
                          " vertices, budget is " + std::to_string(budget));
    if (n == 0) return {-1, TreeDecomposition::single_bag({})};

    detail::MaskGraph m = detail::MaskGraph::from(g);
    auto [ub, ub_order] = detail::minfill_order(m);
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    int lb = detail::mmd_lower_bound(m.n, m.adj, all);
    std::vector<Vertex> best_order = ub_order;
    int best = ub;
    if (lb < ub) {
        detail::BnbState s;
        s.base = &m;
        s.best_width = ub;
        s.best_order = ub_order;
        s.adj = m.adj;
        s.search(0, 0);
        best = s.best_width;
        best_order = s.best_order;
    }
    return {best, detail::decomposition_from_order(g, best_order)};
}

namespace detail {

// Set-based min-fill for graphs beyond the 64-vertex mask representation.
inline std::pair<int, std::vector<Vertex>> minfill_order_large(const StaticGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& [a, b] : g.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<char> alive(n, 1);
    std::vector<Vertex> order;
    int width = 0;
    for (int step = 0; step < n; ++step) {
        int best_v = -1;
        long best_fill = std::numeric_limits<long>::max();
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (fill < best_fill) { best_fill = fill; best_v = v; }
        }
        width = std::max(width, static_cast<int>(adj[best_v].size()));
        std::vector<Vertex> nb(adj[best_v].begin(), adj[best_v].end());
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        for (Vertex w2 : nb) adj[w2].erase(best_v);
        adj[best_v].clear();
        alive[best_v] = 0;
        order.push_back(best_v);
    }
    return {width, order};
}

inline TreeDecomposition decomposition_from_order_large(const StaticGraph& g,
                                                        const std::vector<Vertex>& order) {
    const int n = g.num_vertices();
    std::vector<std::set<Vertex>> adj(n);
    for (const auto& [a, b] : g.edges()) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    TreeDecomposition d;
    d.num_nodes = n;
    d.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
        d.bags[i] = nb;
        d.bags[i].push_back(v);
        std::sort(d.bags[i].begin(), d.bags[i].end());
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        for (Vertex w : nb) adj[w].erase(v);
        adj[v].clear();
        if (!nb.empty()) {
            Vertex first = nb[0];
            for (Vertex w : nb)
                if (pos[w] < pos[first]) first = w;
            d.tree_edges.push_back({i, pos[first]});
        } else if (i + 1 < n) {
            d.tree_edges.push_back({i, i + 1});
        }
    }
    if (n == 0) {
        d.num_nodes = 1;
        d.bags.assign(1, {});
    }
    return d;
}

} // namespace detail

// Min-fill upper bound; exact on chordal graphs, deterministic tie-breaking.
inline std::pair<int, TreeDecomposition> treewidth_heuristic(const StaticGraph& g) {
    if (g.num_vertices() == 0) return {-1, TreeDecomposition::single_bag({})};
    if (g.num_vertices() > 64) {
        auto [w, order] = detail::minfill_order_large(g);
        return {w, detail::decomposition_from_order_large(g, order)};
    }
    detail::MaskGraph m = detail::MaskGraph::from(g);
    auto [w, order] = detail::minfill_order(m);
    return {w, detail::decomposition_from_order(g, order)};
}

// --- cops-and-robber game -----------------------------------------------------

// True iff k cops have a winning strategy in the vertex-pursuit game of
// Lemma 1 (cop sets of size at most k; robber moves within the component of
// G - (C_i cap C_{i-1}) containing its old position).
inline bool cops_win(const StaticGraph& g, int k, int budget = 10) {
    const int n = g.num_vertices();
    if (n > budget)
        throw BudgetError("cops_win: graph has " + std::to_string(n) +
                          " vertices, budget is " + std::to_string(budget));
    if (k < 0) throw DomainError("cops_win: negative cop count");
    if (n == 0) return true;
    if (k >= n) return true;

    detail::MaskGraph m = detail::MaskGraph::from(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    std::vector<std::uint64_t> cop_sets;
    for (std::uint64_t c = 0; c <= full; ++c)
        if (detail::popcount(c) <= k) cop_sets.push_back(c);

    auto component = [&](Vertex r, std::uint64_t blocked) {
        std::uint64_t comp = std::uint64_t{1} << r;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t rest = frontier; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                next |= m.adj[v] & ~blocked & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        return comp;
    };

    // win[state(C, r)] computed as a least fixpoint.
    std::unordered_map<std::uint64_t, int> cop_index;
    for (std::size_t i = 0; i < cop_sets.size(); ++i) cop_index[cop_sets[i]] = static_cast<int>(i);
    std::vector<char> win(cop_sets.size() * n, 0);
    auto idx = [&](int ci, Vertex r) { return static_cast<std::size_t>(ci) * n + r; };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ci = 0; ci < cop_sets.size(); ++ci) {
            std::uint64_t c = cop_sets[ci];
            for (Vertex r = 0; r < n; ++r) {
                if (c & (std::uint64_t{1} << r)) continue;
                if (win[idx(static_cast<int>(ci), r)]) continue;
                for (std::size_t cj = 0; cj < cop_sets.size(); ++cj) {
                    std::uint64_t c2 = cop_sets[cj];
                    std::uint64_t comp = component(r, c & c2);
                    std::uint64_t options = comp & ~c2;
                    bool all_win = true;
                    for (std::uint64_t rest = options; rest && all_win;) {
                        int r2 = std::countr_zero(rest);
                        rest &= rest - 1;
                        if (!win[idx(static_cast<int>(cj), r2)]) all_win = false;
                    }
                    if (all_win) {
                        win[idx(static_cast<int>(ci), r)] = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    // Initial move: cops pick C0, robber replies anywhere outside C0.
    for (std::size_t ci = 0; ci < cop_sets.size(); ++ci) {
        std::uint64_t c = cop_sets[ci];
        bool all_win = true;
        for (Vertex r = 0; r < n && all_win; ++r)
            if (!(c & (std::uint64_t{1} << r)) && !win[idx(static_cast<int>(ci), r)]) all_win = false;
        if (all_win) return true;
    }
    return false;
}

// --- PACE-style .td text format -----------------------------------------------

inline void write_td(const TreeDecomposition& d, int n, std::ostream& out) {
    out << "s td " << d.num_nodes << ' ' << d.width() + 1 << ' ' << n << '\n';
    for (int i = 0; i < d.num_nodes; ++i) {
        out << "b " << i + 1;
        for (Vertex v : d.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (const auto& [a, b] : d.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

inline TreeDecomposition read_td(std::istream& in) {
    TreeDecomposition d;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int declared_bags = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        if (line[0] == 's') {
            std::string s, td;
            int width_plus1 = 0, n = 0;
            if (!(fields >> s >> td >> declared_bags >> width_plus1 >> n) || td != "td")
                throw ParseError("line " + std::to_string(lineno) + ": bad solution line");
            d.num_nodes = declared_bags;
            d.bags.assign(declared_bags, {});
            have_header = true;
        } else if (line[0] == 'b') {
            if (!have_header) throw ParseError("line " + std::to_string(lineno) + ": bag before header");
            char bch;
            int id;
            fields >> bch >> id;
            if (id < 1 || id > declared_bags)
                throw ParseError("line " + std::to_string(lineno) + ": bag id out of range");
            Vertex v;
            while (fields >> v) d.bags[id - 1].push_back(v - 1);
            std::sort(d.bags[id - 1].begin(), d.bags[id - 1].end());
        } else {
            if (!have_header) throw ParseError("line " + std::to_string(lineno) + ": edge before header");
            int a, b;
            if (!(fields >> a >> b))
                throw ParseError("line " + std::to_string(lineno) + ": bad tree edge");
            d.tree_edges.push_back({a - 1, b - 1});
        }
    }
    if (!have_header) throw ParseError("missing 's td' header");
    return d;
}

} // namespace tempo
