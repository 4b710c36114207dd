#include <doctest.h>

#include "bridgegirth/constructions.hpp"
#include "bridgegirth/errors.hpp"
#include "bridgegirth/path_system.hpp"
#include "bridgegirth/rng.hpp"
#include "oracle_helpers.hpp"

using namespace bridgegirth;

TEST_CASE("validate accepts and rejects per the invariants") {
    PathSystem ok{3, {{0, 1, 2}}, false};
    CHECK(!validate(ok));

    PathSystem repeat{1, {{0, 0}}, false};
    auto v = validate(repeat);
    REQUIRE(v.has_value());
    CHECK(v->message == "repeated node 0 in path 0");

    PathSystem range{3, {{0, 5}}, false};
    v = validate(range);
    REQUIRE(v.has_value());
    CHECK(v->message == "node 5 out of range in path 0");
}

TEST_CASE("stats: two disjoint 4-paths over 8 nodes") {
    PathSystem s{8, {{0, 1, 2, 3}, {4, 5, 6, 7}}, false};
    auto st = stats(s);
    CHECK(st.size == 8);
    CHECK(st.avg_degree == Rational(1));
    CHECK(st.avg_length == Rational(4));
    CHECK(st.l2_norm_sq == 32);
}

TEST_CASE("stats: quadratic construction q=3 is 3-regular everywhere") {
    auto s = quad_construction(3);
    auto st = stats(s);
    CHECK(st.size == 81);
    CHECK(st.min_degree == 3);
    CHECK(st.max_degree == 3);
    CHECK(st.min_length == 3);
    CHECK(st.max_length == 3);
}

TEST_CASE("stats: empty system has zero averages") {
    PathSystem s{0, {}, false};
    auto st = stats(s);
    CHECK(st.size == 0);
    CHECK(st.avg_degree == Rational(0));
    CHECK(st.avg_length == Rational(0));
}

TEST_CASE("size identity holds exactly on random systems") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = testing::random_system(rng, 6, 5);
        auto st = stats(s);
        CHECK(Rational(s.node_count) * st.avg_degree == Rational(st.size));
        CHECK(Rational(static_cast<long long>(s.paths.size())) * st.avg_length ==
              Rational(st.size));
        long long deg_total = 0;
        for (long long d : degrees(s)) deg_total += d;
        CHECK(deg_total == st.size);
    }
}

TEST_CASE("topological order") {
    PathSystem chain{3, {{0, 1}, {1, 2}}, false};
    auto topo = topological_order(chain);
    REQUIRE(topo.acyclic);
    CHECK(topo.order == std::vector<NodeId>{0, 1, 2});

    PathSystem tri{3, {{0, 1}, {1, 2}, {2, 0}}, false};
    topo = topological_order(tri);
    REQUIRE(!topo.acyclic);
    REQUIRE(topo.cycle.size() >= 3);
    CHECK(topo.cycle.front() == topo.cycle.back());

    PathSystem rev{3, {{0, 1, 2}, {2, 1, 0}}, false};
    CHECK(!topological_order(rev).acyclic);
}

TEST_CASE("topological order is consistent with every path") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = testing::random_system(rng, 6, 4);
        auto topo = topological_order(s);
        if (!topo.acyclic) continue;
        std::vector<int> rank(static_cast<std::size_t>(s.node_count));
        for (std::size_t i = 0; i < topo.order.size(); ++i)
            rank[static_cast<std::size_t>(topo.order[i])] = static_cast<int>(i);
        for (const Path& p : s.paths)
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                CHECK(rank[static_cast<std::size_t>(p[i])] <
                      rank[static_cast<std::size_t>(p[i + 1])]);
    }
}

TEST_CASE("induced subsystem basics") {
    PathSystem s{4, {{0, 1, 2, 3}}, false};
    auto r = induced_subsystem(s, std::vector<NodeId>{1, 3});
    CHECK(r.system.node_count == 2);
    REQUIRE(r.system.paths.size() == 1);
    CHECK(r.system.paths[0] == Path{0, 1});
    CHECK(r.old_of_new == std::vector<NodeId>{1, 3});

    std::vector<bool> all(4, true);
    auto id = induced_subsystem(s, all);
    CHECK(id.system.paths == s.paths);
    CHECK(id.system.node_count == s.node_count);
}

TEST_CASE("induced subsystem keeps degrees of surviving nodes") {
    auto s = quad_construction(3);
    Rng rng(3);
    std::vector<bool> keep(static_cast<std::size_t>(s.node_count), false);
    for (NodeId v = 0; v < s.node_count; ++v) keep[static_cast<std::size_t>(v)] = rng.coin();
    auto before = degrees(s);
    auto r = induced_subsystem(s, keep);
    auto after = degrees(r.system);
    for (NodeId nv = 0; nv < r.system.node_count; ++nv)
        CHECK(after[static_cast<std::size_t>(nv)] ==
              before[static_cast<std::size_t>(r.old_of_new[static_cast<std::size_t>(nv)])]);
}

TEST_CASE("serialize / parse round trip") {
    PathSystem tri{3, {{0, 1}, {1, 2}, {2, 0}}, false};
    auto back = parse_path_system_string(serialize(tri));
    CHECK(back.node_count == tri.node_count);
    CHECK(back.paths == tri.paths);
    CHECK(back.ordered == tri.ordered);

    auto quad = quad_construction(5);
    std::string once = serialize(quad);
    CHECK(serialize(parse_path_system_string(once)) == once);
}

TEST_CASE("parse rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_path_system_string("pathsys 1\nnodes 2\nordered 0\npath 0 0\n"),
                    InputError);
    CHECK_THROWS_AS(parse_path_system_string("pathsys 2\n"), InputError);
    CHECK_THROWS_AS(parse_path_system_string("pathsys 1\nnodes 2\nordered 0\npath 0 7\n"),
                    InputError);
    try {
        parse_path_system_string("pathsys 1\nnodes 2\nordered 0\npath 0 0\n");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
        CHECK(std::string(e.what()).find("repeated node") != std::string::npos);
    }
}

TEST_CASE("parse round trip on random systems, order and empties preserved") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = testing::random_system(rng, 6, 4);
        s.ordered = rng.coin();
        if (rng.coin()) s.paths.push_back({}); // length-0 paths are representable
        auto back = parse_path_system_string(serialize(s));
        CHECK(back.node_count == s.node_count);
        CHECK(back.paths == s.paths);
        CHECK(back.ordered == s.ordered);
    }
}
