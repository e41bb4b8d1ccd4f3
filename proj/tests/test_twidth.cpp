#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "tempo/generators.hpp"
#include "tempo/twidth.hpp"

using namespace tempo;

namespace {

TemporalGraph all_times_path(int n, TimeStep tau) {
    std::vector<TemporalEdge> es;
    for (int i = 0; i + 1 < n; ++i)
        for (TimeStep t = 1; t <= tau; ++t) es.emplace_back(i, i + 1, t);
    return TemporalGraph(n, tau, std::move(es));
}

} // namespace

TEST_CASE("layer treewidth", "[twidth]") {
    auto g = fixtures::example_graph();
    // Layers 1 and 2 are forests; layer 3 contains triangles {1,2,5} and
    // {0,1,3}, so the layer maximum is 2.
    CHECK(treewidth_exact(g.layer(1)).first == 1);
    CHECK(treewidth_exact(g.layer(2)).first == 1);
    CHECK(treewidth_exact(g.layer(3)).first == 2);
    CHECK(tw_layers(g) == 2);

    auto single = TemporalGraph(4, 1, {TemporalEdge(0, 1, 1), TemporalEdge(1, 2, 1)});
    CHECK(tw_layers(single) == treewidth_exact(single.layer(1)).first);
    CHECK(tw_layers(TemporalGraph(3, 2, {})) == 0);
}

TEST_CASE("underlying treewidth", "[twidth]") {
    CHECK(tw_underlying(fixtures::example_graph()) == 2);
    auto star = TemporalGraph(5, 2, {TemporalEdge(0, 1, 1), TemporalEdge(0, 2, 1),
                                     TemporalEdge(0, 3, 2), TemporalEdge(0, 4, 2)});
    CHECK(tw_underlying(star) == 1);
    auto tri = TemporalGraph(3, 1,
                             {TemporalEdge(0, 1, 1), TemporalEdge(1, 2, 1), TemporalEdge(0, 2, 1)});
    CHECK(tw_underlying(tri) == 2);
}

TEST_CASE("slice treewidth", "[twidth]") {
    auto g = fixtures::example_graph();
    CHECK(tw_slice(g, 1) == tw_layers(g));
    CHECK(tw_slice(g, 3) == tw_underlying(g));
    CHECK(tw_slice(g, 2) == 2);
    CHECK_THROWS_AS(tw_slice(g, 0), DomainError);
    CHECK_THROWS_AS(tw_slice(g, 4), DomainError);
}

TEST_CASE("slice treewidth is monotone in delta", "[twidth]") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random(6, 4, 0.3, seed + 11);
        int prev = -1;
        for (TimeStep d = 1; d <= g.lifetime(); ++d) {
            int cur = tw_slice(g, d);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("layer permutation invariance of tw_inf and tw_down", "[twidth]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gen_random(5, 3, 0.35, seed + 77);
        // Rotate layers 1->2->3->1.
        std::vector<TemporalEdge> rot;
        for (const auto& e : g.edges()) rot.emplace_back(e.u, e.v, e.t % 3 + 1);
        TemporalGraph h(5, 3, rot);
        CHECK(tw_layers(g) == tw_layers(h));
        CHECK(tw_underlying(g) == tw_underlying(h));
    }
}

TEST_CASE("temporal treewidth via the expansion", "[twidth]") {
    SECTION("grids from all-times paths") {
        auto [w, d] = ttw(all_times_path(3, 3));
        CHECK(w == 3);
        CHECK(validate_ttdc(all_times_path(3, 3), d).ok());
    }
    SECTION("forest underlying graph, each edge once") {
        auto g = TemporalGraph(4, 3, {TemporalEdge(0, 1, 1), TemporalEdge(1, 2, 2),
                                      TemporalEdge(1, 3, 3)});
        CHECK(ttw(g).first == 1);
    }
    SECTION("tau=1 collapses to the underlying treewidth") {
        auto g = TemporalGraph(4, 1, {TemporalEdge(0, 1, 1), TemporalEdge(1, 2, 1),
                                      TemporalEdge(0, 2, 1)});
        CHECK(ttw(g).first == tw_underlying(g));
    }
}

TEST_CASE("ttw returns a valid ttdc within the paper bounds", "[twidth]") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g = gen_random(4, 3, 0.4, seed + 19);
        auto [w, d] = ttw(g, WidthMode::Exact, 25);
        REQUIRE(validate_ttdc(g, d).ok());
        int down = tw_underlying(g);
        CHECK(down <= w);
        CHECK(w <= (down + 1) * g.lifetime() - 1);
    }
}

TEST_CASE("validate_ttdc witnesses", "[twidth]") {
    auto g = TemporalGraph(2, 2, {TemporalEdge(0, 1, 1)});
    auto [w, d] = ttw(g);
    REQUIRE(validate_ttdc(g, d).ok());

    SECTION("missing succession pair") {
        // One bag per appearance: condition (iii) has no co-bagged pair.
        TemporalTreeDecomposition bad;
        bad.num_nodes = 4;
        bad.bags = {{{0, 1}, {1, 1}}, {{0, 2}}, {{1, 2}}, {{0, 1}}};
        bad.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
        auto r = validate_ttdc(g, bad);
        CHECK_FALSE(r.ok());
        CHECK_FALSE(r.successions_cobagged);
    }
    SECTION("edgeless graph accepts per-appearance bags with succession pairs") {
        auto h = TemporalGraph(2, 2, {});
        TemporalTreeDecomposition d2;
        d2.num_nodes = 2;
        d2.bags = {{{0, 1}, {0, 2}}, {{1, 1}, {1, 2}}};
        d2.tree_edges = {{0, 1}};
        auto r = validate_ttdc(h, d2);
        CHECK(r.ok());
        CHECK(d2.width() == 1);
    }
    SECTION("uncovered edge endpoints") {
        TemporalTreeDecomposition bad;
        bad.num_nodes = 2;
        bad.bags = {{{0, 1}, {0, 2}}, {{1, 1}, {1, 2}}};
        bad.tree_edges = {{0, 1}};
        auto r = validate_ttdc(g, bad);
        CHECK_FALSE(r.edges_cobagged);
    }
}

TEST_CASE("canonical ttdc", "[twidth]") {
    SECTION("width bound on the running example") {
        auto g = fixtures::example_graph();
        auto [w, base] = treewidth_exact(g.underlying_graph());
        auto t = canonical_ttdc(g, base);
        CHECK(validate_ttdc(g, t).ok());
        CHECK(t.width() <= (w + 1) * g.lifetime() - 1);
    }
    SECTION("six-bag decomposition over a tau=3 graph on the same vertex set") {
        auto base = fixtures::width_two_decomposition();
        auto skeleton = fixtures::width_two_graph();
        std::vector<TemporalEdge> es;
        for (const auto& [a, b] : skeleton.edges())
            for (TimeStep t = 1; t <= 3; ++t) es.emplace_back(a, b, t);
        TemporalGraph g(11, 3, es);
        auto t = canonical_ttdc(g, base);
        CHECK(validate_ttdc(g, t).ok());
        CHECK(t.width() <= 8); // (2+1)*3 - 1
    }
    SECTION("tau=1 is isomorphic to the base") {
        auto g = TemporalGraph(3, 1, {TemporalEdge(0, 1, 1), TemporalEdge(1, 2, 1)});
        auto [w, base] = treewidth_exact(g.underlying_graph());
        auto t = canonical_ttdc(g, base);
        CHECK(t.num_nodes == base.num_nodes);
        for (int i = 0; i < t.num_nodes; ++i)
            CHECK(t.bags[i].size() == base.bags[i].size());
    }
    SECTION("single all-vertex bag gives width n*tau-1") {
        auto g = TemporalGraph(3, 2, {TemporalEdge(0, 1, 1), TemporalEdge(1, 2, 2)});
        Bag all{0, 1, 2};
        auto t = canonical_ttdc(g, TreeDecomposition::single_bag(all));
        CHECK(t.width() == 3 * 2 - 1);
    }
    SECTION("invalid base is rejected") {
        auto g = fixtures::example_graph();
        CHECK_THROWS_AS(canonical_ttdc(g, TreeDecomposition::single_bag({0})), DomainError);
    }
}

TEST_CASE("ordering chain on small random instances", "[twidth]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gen_random(5, 3, 0.3, seed * 3 + 2);
        int inf = tw_layers(g);
        int down = tw_underlying(g);
        int t = ttw(g).first;
        CHECK(inf <= down);
        for (TimeStep dl = 1; dl <= g.lifetime(); ++dl) {
            int s = tw_slice(g, dl);
            CHECK(inf <= s);
            CHECK(s <= down);
        }
        CHECK(down <= t);
        CHECK(t <= (down + 1) * g.lifetime() - 1);
    }
}

TEST_CASE("width report flags exactness", "[twidth]") {
    auto g = fixtures::example_graph();
    auto r = width_report(g, {1, 2, 3});
    CHECK(r.tw_layer_max == 2);
    CHECK(r.tw_underlying == 2);
    CHECK(r.tw_slice.at(2).first == 2);
    CHECK(r.tw_layer_exact);
    CHECK(r.ttw_exact); // the 18-vertex expansion fits the default budget

    auto hr = width_report(g, {1}, WidthMode::Heuristic);
    CHECK_FALSE(hr.tw_layer_exact);
    CHECK(hr.tw_underlying >= r.tw_underlying);
}

TEST_CASE("all four parameters coincide at lifetime one", "[twidth]") {
    auto g = TemporalGraph(4, 1, {TemporalEdge(0, 1, 1), TemporalEdge(1, 2, 1),
                                  TemporalEdge(0, 2, 1), TemporalEdge(2, 3, 1)});
    auto r = width_report(g, {1});
    CHECK(r.tw_layer_max == r.tw_underlying);
    CHECK(r.tw_slice.at(1).first == r.tw_underlying);
    CHECK(r.ttw == r.tw_underlying);
}

TEST_CASE("ttdc format round trip", "[twidth]") {
    auto g = fixtures::example_graph();
    auto [w, base] = treewidth_exact(g.underlying_graph());
    auto t = canonical_ttdc(g, base);
    std::ostringstream out;
    write_ttdc(t, g.num_vertices(), g.lifetime(), out);
    std::istringstream in(out.str());
    auto t2 = read_ttdc(in);
    CHECK(t2.num_nodes == t.num_nodes);
    CHECK(t2.bags == t.bags);
    CHECK(validate_ttdc(g, t2).ok());
}
