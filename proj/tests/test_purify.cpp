#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pathbasis/errors.hpp"
#include "pathbasis/ingest.hpp"
#include "pathbasis/purify.hpp"

using namespace pbtest;

namespace {

std::vector<FlawKind> kinds_of(const FlawReport& r) {
    std::vector<FlawKind> kinds;
    for (const Flaw& f : r.flaws) kinds.push_back(f.kind);
    return kinds;
}

int degree_zero_count(const Cfg& g, bool incoming) {
    int n = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if ((incoming ? g.in_edges(i) : g.out_edges(i)).empty()) ++n;
    }
    return n;
}

} // namespace

TEST_CASE("detect_flaws: clean graphs") {
    CHECK(detect_flaws(single_edge_cfg()).flaws.empty());
    CHECK_FALSE(detect_flaws(single_edge_cfg()).blocking);
    CHECK(detect_flaws(load_json_fixture("fig3.json")).flaws.empty());
}

TEST_CASE("detect_flaws: unreachable node") {
    Cfg g = load_json_fixture("unreachable.json");
    FlawReport r = detect_flaws(g);
    REQUIRE(kinds_of(r) == std::vector<FlawKind>{FlawKind::UnreachableCode});
    CHECK(r.flaws[0].nodes == std::vector<NodeId>{g.find("x")});
    CHECK(r.blocking);
}

TEST_CASE("detect_flaws: dead-end node") {
    Cfg g = load_json_fixture("deadend.json");
    FlawReport r = detect_flaws(g);
    REQUIRE(kinds_of(r) == std::vector<FlawKind>{FlawKind::DeadEnd});
    CHECK(r.flaws[0].nodes == std::vector<NodeId>{g.find("d")});
    CHECK(r.blocking);
}

TEST_CASE("detect_flaws: declared second entry") {
    Cfg g = load_json_fixture("two_entry.json");
    FlawReport r = detect_flaws(g);
    REQUIRE(kinds_of(r) == std::vector<FlawKind>{FlawKind::MultipleEntries});
    CHECK_FALSE(r.blocking);
}

TEST_CASE("detect_flaws: three declared exits") {
    Cfg g = load_json_fixture("three_exit.json");
    FlawReport r = detect_flaws(g);
    REQUIRE(kinds_of(r) == std::vector<FlawKind>{FlawKind::MultipleExits});
    CHECK_FALSE(r.blocking);
}

TEST_CASE("detect_flaws: intersecting loops sharing a node") {
    Cfg g = load_json_fixture("intersecting_loops.json");
    FlawReport r = detect_flaws(g);
    REQUIRE(kinds_of(r) == std::vector<FlawKind>{FlawKind::HorribleLoop});
    std::vector<NodeId> expected{g.find("a"), g.find("m"), g.find("b")};
    std::sort(expected.begin(), expected.end());
    CHECK(r.flaws[0].nodes == expected);
    CHECK(r.blocking);
}

TEST_CASE("detect_flaws: jump into a loop body") {
    Cfg g = load_json_fixture("jump_into_loop.json");
    FlawReport r = detect_flaws(g);
    REQUIRE(kinds_of(r) == std::vector<FlawKind>{FlawKind::IrreducibleLoop});
    CHECK(r.blocking);
}

TEST_CASE("detect_flaws: proper loops are not flaws") {
    Cfg g = load_mini_fixture("nested_while.mini");
    CHECK(detect_flaws(g).flaws.empty());
    g = load_mini_fixture("goto_backward.mini");
    CHECK(detect_flaws(g).flaws.empty());
}

TEST_CASE("normalize: two entries gain a synthetic begin") {
    Cfg g = load_json_fixture("two_entry.json");
    Cfg n = normalize_entries_exits(g);
    CHECK(n.node_count() == g.node_count() + 1);
    CHECK(n.edge_count() == g.edge_count() + 2);
    CHECK(n.node(n.begin()).kind == NodeKind::Begin);
    CHECK(n.out_edges(n.begin()).size() == 2);
    CHECK(degree_zero_count(n, true) == 1);
}

TEST_CASE("normalize: identity for single-entry/exit graphs") {
    Cfg g = load_json_fixture("fig3.json");
    Cfg n = normalize_entries_exits(g);
    CHECK(serialize_json_cfg(n) == serialize_json_cfg(g));
}

TEST_CASE("normalize: three exits raise complexity by two") {
    Cfg g = load_json_fixture("three_exit.json");
    int before = static_cast<int>(g.edge_count()) -
                 static_cast<int>(g.node_count()) + 2;
    Cfg n = normalize_entries_exits(g);
    int after = static_cast<int>(n.edge_count()) -
                static_cast<int>(n.node_count()) + 2;
    CHECK(after == before + 2);
    CHECK(n.in_edges(n.end()).size() == 3);
    CHECK(degree_zero_count(n, false) == 1);
}

TEST_CASE("purify: clean diamond is untouched") {
    Cfg g = diamond_cfg();
    PurifyResult r = purify(g);
    CHECK(r.graph == g);
    CHECK(r.report.flaws.empty());
}

TEST_CASE("purify: multi-exit graph is repaired and noted") {
    Cfg g = load_json_fixture("three_exit.json");
    PurifyResult r = purify(g);
    CHECK_FALSE(r.report.blocking);
    REQUIRE(r.report.flaws.size() == 1);
    CHECK(r.report.flaws[0].kind == FlawKind::MultipleExits);
    CHECK(r.report.flaws[0].message.find("resolved") != std::string::npos);
    // residual scan found no entry/exit problems
    FlawReport residual = detect_flaws(r.graph);
    CHECK(residual.flaws.empty());
}

TEST_CASE("purify: blocking flaws halt the pipeline") {
    Cfg g = load_json_fixture("intersecting_loops.json");
    PurifyResult r = purify(g);
    CHECK(r.report.blocking);
}

TEST_CASE("purify: idempotent") {
    for (const char* name : {"two_entry.json", "three_exit.json", "fig3.json"}) {
        PurifyResult first = purify(load_json_fixture(name));
        PurifyResult second = purify(first.graph);
        CHECK(second.graph == first.graph);
        CHECK(second.report.blocking == first.report.blocking);
        for (const Flaw& f : second.report.flaws) {
            CHECK(f.kind != FlawKind::MultipleEntries);
            CHECK(f.kind != FlawKind::MultipleExits);
        }
    }
}

TEST_CASE("normalize: empty graph is rejected") {
    Cfg g;
    CHECK_THROWS_AS(normalize_entries_exits(g), StructuralError);
}
