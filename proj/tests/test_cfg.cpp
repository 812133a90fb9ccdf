#include <doctest.h>

#include "helpers.hpp"
#include "pathbasis/errors.hpp"

using namespace pbtest;

TEST_CASE("close_graph appends the virtual edge last") {
    Cfg g = single_edge_cfg();
    ClosedCfg closed = close_graph(g);
    CHECK(closed.graph.edge_count() == 2);
    CHECK(closed.graph.node_count() == 2);
    CHECK(closed.virtual_edge == 1);
    CHECK(closed.graph.edge(1).from == g.end());
    CHECK(closed.graph.edge(1).to == g.begin());
    // the input is untouched
    CHECK(g.edge_count() == 1);
}

TEST_CASE("close_graph on the worked example") {
    Cfg g = load_json_fixture("fig3.json");
    ClosedCfg closed = close_graph(g);
    CHECK(closed.graph.edge_count() == 10);
    CHECK(closed.virtual_edge == 9);
    CHECK(closed.graph.node_count() == 7);
}

TEST_CASE("close_graph rejects an empty graph") {
    Cfg g;
    CHECK_THROWS_AS(close_graph(g), StructuralError);
}

TEST_CASE("cyclomatic complexity") {
    CHECK(cyclomatic_complexity(close_graph(single_edge_cfg())) == 1);
    CHECK(cyclomatic_complexity(close_graph(diamond_cfg())) == 2);
    CHECK(cyclomatic_complexity(close_graph(load_json_fixture("fig3.json"))) == 4);
}

TEST_CASE("diamond has exactly two independent paths") {
    auto [count, rank] = enumerate_and_rank(diamond_cfg());
    CHECK(count == 2);
    CHECK(rank == 2);
}

TEST_CASE("strong connectivity of closed graphs") {
    CHECK(is_strongly_connected(close_graph(single_edge_cfg())));
    CHECK(is_strongly_connected(close_graph(load_json_fixture("fig3.json"))));

    Cfg g = single_edge_cfg();
    g.add_node("isolated", NodeKind::Action);
    CHECK_FALSE(is_strongly_connected(close_graph(g)));
}

TEST_CASE("reach_sets") {
    Cfg g = single_edge_cfg();
    ReachSets r = reach_sets(g);
    CHECK(r.from_begin == std::vector<bool>{true, true});
    CHECK(r.to_end == std::vector<bool>{true, true});

    NodeId x = g.add_node("x", NodeKind::Action);
    r = reach_sets(g);
    CHECK_FALSE(r.from_begin[x]);
    CHECK_FALSE(r.to_end[x]);

    Cfg fig3 = load_json_fixture("fig3.json");
    r = reach_sets(fig3);
    for (NodeId n = 0; n < fig3.node_count(); ++n) {
        CHECK(r.from_begin[n]);
        CHECK(r.to_end[n]);
    }
}

TEST_CASE("closure invariants") {
    for (const char* name : {"fig3.json", "crossbar.json"}) {
        Cfg g = load_json_fixture(name);
        ClosedCfg closed = close_graph(g);
        CHECK(closed.graph.edge_count() == g.edge_count() + 1);
        CHECK(closed.graph.node_count() == g.node_count());
        CHECK(cyclomatic_complexity(closed) ==
              static_cast<int>(g.edge_count()) -
                  static_cast<int>(g.node_count()) + 2);
        CHECK(cyclomatic_complexity(closed) >= 1);
    }
}
