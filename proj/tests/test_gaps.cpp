#include <doctest.h>

#include <set>
#include <sstream>

#include "bridgegirth/constructions.hpp"
#include "bridgegirth/errors.hpp"
#include "bridgegirth/gaps.hpp"
#include "bridgegirth/transforms.hpp"
#include "oracle_helpers.hpp"

using namespace bridgegirth;

TEST_CASE("partition_paths shapes and endpoints") {
    auto rs = rs_construction(3, {0, 1});
    auto rep = partition_paths(rs, 6, 3); // d == p: singletons
    CHECK(rep.parts.size() == 6);
    for (std::size_t i = 0; i < rep.parts.size(); ++i) {
        CHECK(rep.parts[i].size() == 1);
        CHECK(rep.coverage[i] == 3);
    }

    auto one = partition_paths(rs, 1, 3);
    CHECK(one.parts.size() == 1);
    CHECK(one.parts[0].size() == 6);

    CHECK_THROWS_AS(partition_paths(rs, 7, 3), InputError);
}

TEST_CASE("partition sizes are equitable") {
    auto rs = rs_construction(5, {0, 1, 3, 4}); // 20 paths
    auto rep = partition_paths(rs, 16, 9);
    std::size_t total = 0;
    for (const auto& part : rep.parts) {
        CHECK(part.size() >= 1);
        CHECK(part.size() <= 2);
        total += part.size();
    }
    CHECK(total == 20);
}

TEST_CASE("build_gs on a single path") {
    PathSystem s{3, {{0, 1, 2}}, false};
    auto gs = build_gs(s, {{0}});
    // transitive closure edges 0->1, 0->2, 1->2 plus the two terminal hooks
    CHECK(gs.edges.size() == 5);
    CHECK(gs.nonterminal_count() == 3);
    CHECK(gs.demands.size() == 1);
    for (int ty : gs.edge_type) CHECK(ty == 1);
}

TEST_CASE("build_h parameter formulas") {
    CHECK(h_layer_width(4) == 2);
    CHECK(h_layer_count(4) == 1);
    CHECK(h_layer_width(16) == 4);
    CHECK(h_layer_count(16) == 2);

    auto h4 = build_h(4, 7);
    CHECK(h4.d_prime == 1);
    CHECK(h4.layer_width == 2);
    CHECK(h4.nonterminal_count() == 4);
    CHECK(h4.demands.size() == 4);

    auto h16 = build_h(16, 7);
    CHECK(h16.d_prime == 2);
    CHECK(h16.layer_width == 4);
    // H alone is not all-canonical (types share nonterminals), but every
    // canonical route crosses exactly d' layers
    auto rep = check_long_paths(h16);
    CHECK(rep.min_canonical == 2);

    CHECK_THROWS_AS(build_h(3, 7), InputError);
    CHECK_THROWS_AS(build_h(5, 7), InputError); // layer union would exceed d/2
}

TEST_CASE("product of rs(5) and h(16) is canonical with min nonterminals d'") {
    auto rs = rs_construction(5, {0, 1, 3, 4});
    auto parts = partition_paths(rs, 16, 11);
    auto gs = build_gs(rs, parts.parts);
    auto h = build_h(16, 12);
    auto prod = build_product(gs, h);
    CHECK(prod.big_n == 16 * 30);
    auto rep = check_long_paths(prod);
    CHECK(rep.all_canonical);
    CHECK(rep.unreachable_demands == 0);
    CHECK(rep.min_nonterminals >= prod.d_prime);
    CHECK(rep.ok);
    CHECK(rep.fractional_value == Rational(16 * 30, 2));
}

TEST_CASE("check_long_paths flags a terminal-to-terminal shortcut") {
    auto rs = rs_construction(2, {0, 1});
    auto parts = partition_paths(rs, 4, 5);
    auto gs = build_gs(rs, parts.parts);
    auto h = build_h(4, 5);
    auto prod = build_product(gs, h);
    // wire one demand's terminals directly together
    prod.edges.emplace_back(prod.demands[0].s, prod.demands[0].t);
    prod.edge_type.push_back(prod.demands[0].type);
    auto rep = check_long_paths(prod);
    CHECK(!rep.ok);
    CHECK(rep.min_nonterminals == 0);
}

TEST_CASE("build_product wants matching d") {
    auto rs = rs_construction(2, {0, 1});
    auto gs = build_gs(rs, partition_paths(rs, 4, 5).parts);
    auto h = build_h(8, 5);
    CHECK_THROWS_AS(build_product(gs, h), InputError);
}

TEST_CASE("brute force multicut on a two-hop chain") {
    GapInstance g;
    g.node_count = 3;
    g.terminal = {1, 0, 1};
    g.edges = {{0, 1}, {1, 2}};
    g.edge_type = {1, 1};
    g.demands = {{0, 2, 1}};
    auto res = brute_force_vertex_multicut(g);
    CHECK(res.size == 1);
    CHECK(res.cut == std::vector<int>{1});
}

TEST_CASE("brute force multicut on two disjoint 2-hop demands") {
    GapInstance g;
    g.node_count = 6;
    g.terminal = {1, 0, 1, 1, 0, 1};
    g.edges = {{0, 1}, {1, 2}, {3, 4}, {4, 5}};
    g.edge_type = {1, 1, 2, 2};
    g.demands = {{0, 2, 1}, {3, 5, 2}};
    auto res = brute_force_vertex_multicut(g);
    CHECK(res.size == 2);
}

TEST_CASE("brute force multicut resource limit") {
    GapInstance g;
    g.node_count = 30;
    g.terminal.assign(30, 0);
    CHECK_THROWS_AS(brute_force_vertex_multicut(g, 22), ResourceError);
}

TEST_CASE("node_split weights and flow preservation") {
    GapInstance g;
    g.node_count = 3;
    g.terminal = {1, 0, 1};
    g.edges = {{0, 1}, {1, 2}};
    g.edge_type = {1, 1};
    auto res = node_split(g);
    REQUIRE(res.graph.edges.size() == 3);
    long long weight_total = 0;
    for (const Edge& e : res.graph.edges) weight_total += e.w.is_zero() ? 0 : 1;
    CHECK(weight_total == 1); // exactly the one internal edge

    GapInstance terminals_only;
    terminals_only.node_count = 2;
    terminals_only.terminal = {1, 1};
    terminals_only.edges = {{0, 1}};
    terminals_only.edge_type = {1};
    auto r2 = node_split(terminals_only);
    for (const Edge& e : r2.graph.edges) CHECK(e.w.is_zero());
}

TEST_CASE("max_node_disjoint_paths matches enumeration on random graphs") {
    Rng rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng.below(5)); // up to 8 nodes
        GapInstance g;
        g.node_count = n;
        g.terminal.assign(static_cast<std::size_t>(n), 0);
        g.terminal[0] = 1;
        g.terminal[static_cast<std::size_t>(n - 1)] = 1;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng.below(100) < 40) edges.emplace_back(u, v);
        g.edges = edges;
        g.edge_type.assign(edges.size(), 1);
        long long flow = max_node_disjoint_paths(g, 0, n - 1);
        long long brute = testing::naive_max_disjoint_paths(edges, n, 0, n - 1);
        CHECK(flow == brute);
    }
}

TEST_CASE("max_node_disjoint_paths on the diamond") {
    GapInstance g;
    g.node_count = 4;
    g.terminal = {1, 0, 0, 1};
    g.edges = {{0, 1}, {1, 3}, {0, 2}, {2, 3}};
    g.edge_type = {1, 1, 1, 1};
    CHECK(max_node_disjoint_paths(g, 0, 3) == 2);

    GapInstance line;
    line.node_count = 3;
    line.terminal = {1, 0, 1};
    line.edges = {{0, 1}, {1, 2}};
    line.edge_type = {1, 1};
    CHECK(max_node_disjoint_paths(line, 0, 2) == 1);
}

TEST_CASE("build_dsf_instance from a hand-made source-restricted system") {
    PathSystem s{5, {{0, 1, 2}, {0, 3, 4}}, false};
    auto inst = build_dsf_instance(s, {0});
    REQUIRE(inst.sources.size() == 1);
    CHECK(inst.source_degree[0] == 2);
    CHECK(inst.disjoint_paths[0] == 2);
}

TEST_CASE("build_dsf_instance from the cleaning pipeline") {
    // rs systems are bridge-free, which source restriction preserves;
    // lambda = 1/2 prunes the length-1 remnants that could collide
    auto rs = rs_construction(12, ap_free_set(12, ApFreeMethod::Greedy));
    auto sr = clean_source_restricted(rs, Rational(1, 2), 7);
    auto inst = build_dsf_instance(sr.system, sr.sources);
    REQUIRE(!inst.sources.empty());
    for (std::size_t i = 0; i < inst.sources.size(); ++i)
        CHECK(inst.disjoint_paths[i] == inst.source_degree[i]);
}

TEST_CASE("build_dsf_instance rejects bad inputs") {
    PathSystem not_sr{4, {{0, 1}, {1, 2, 3}}, false};
    CHECK_THROWS_AS(build_dsf_instance(not_sr, {0}), PreconditionError);

    // shared interior node between two same-source paths is a 2-bridge
    PathSystem bridged{4, {{0, 1, 2}, {0, 1, 3}}, false};
    CHECK_THROWS_AS(build_dsf_instance(bridged, {0}), PreconditionError);
}

TEST_CASE("gap instance serialization round trip") {
    auto rs = rs_construction(2, {0, 1});
    auto gs = build_gs(rs, partition_paths(rs, 4, 5).parts);
    auto h = build_h(4, 5);
    auto prod = build_product(gs, h);
    auto text = serialize(prod);
    std::istringstream in(text);
    auto back = parse_gap_instance(in);
    CHECK(back.node_count == prod.node_count);
    CHECK(back.edges == prod.edges);
    CHECK(back.edge_type == prod.edge_type);
    CHECK(back.d_prime == prod.d_prime);
    CHECK(serialize(back) == text);
}

TEST_CASE("h_cut_report at tiny scale") {
    auto h = build_h(16, 5);
    auto rep = h_cut_report(h, 1);
    // removing any single node never erases a whole width-4 layer
    CHECK(rep.max_pairs_disconnected == 0);
    CHECK(rep.sets_checked == 17); // empty set plus 16 singletons
}
