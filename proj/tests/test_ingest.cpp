#include <doctest.h>

#include "helpers.hpp"
#include "pathbasis/errors.hpp"

using namespace pbtest;

TEST_CASE("json: minimal document") {
    Cfg g = parse_json_cfg(R"({
        "name": "tiny", "begin": "s", "end": "t",
        "nodes": [{"id": "s", "kind": "begin"}, {"id": "t", "kind": "end"}],
        "edges": [{"from": "s", "to": "t", "label": "a"}]
    })");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(0).label == "a");
    CHECK(g.node(g.begin()).name == "s");
}

TEST_CASE("json: worked example document") {
    Cfg g = load_json_fixture("fig3.json");
    CHECK(g.node_count() == 7);
    CHECK(g.edge_count() == 9);
    CHECK(g.edge(0).label == "a");
    CHECK(g.edge(8).label == "i");
}

TEST_CASE("json: dangling node reference names the culprit") {
    try {
        parse_json_cfg(R"({
            "name": "bad", "begin": "s", "end": "t",
            "nodes": [{"id": "s", "kind": "begin"}, {"id": "t", "kind": "end"}],
            "edges": [{"from": "s", "to": "q"}]
        })");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("\"q\"") != std::string::npos);
    }
}

TEST_CASE("json: malformed text and missing fields") {
    CHECK_THROWS_AS(parse_json_cfg("{nope"), ParseError);
    CHECK_THROWS_AS(parse_json_cfg(R"({"nodes": [], "edges": []})"), ParseError);
}

TEST_CASE("json: serialize/parse round-trip") {
    for (const char* name :
         {"fig3.json", "crossbar.json", "two_entry.json", "deadend.json"}) {
        Cfg g = load_json_fixture(name);
        Cfg again = parse_json_cfg(serialize_json_cfg(g));
        CHECK(again == g);
    }
    // lowered programs round-trip as well
    Cfg mini = load_mini_fixture("mixed.mini");
    CHECK(parse_json_cfg(serialize_json_cfg(mini)) == mini);
}

TEST_CASE("dot: single edge with inferred begin/end") {
    Cfg g = parse_dot_cfg("digraph { s -> t [label=\"a\"]; }");
    CHECK(g.edge_count() == 1);
    CHECK(g.node(g.begin()).name == "s");
    CHECK(g.node(g.end()).name == "t");
}

TEST_CASE("dot: ambiguous begin is rejected") {
    CHECK_THROWS_AS(parse_dot_cfg("digraph { a -> t; b -> t; }"), ParseError);
}

TEST_CASE("dot: unsupported constructs are named") {
    CHECK_THROWS_AS(parse_dot_cfg("digraph { subgraph c { a -> b; } }"),
                    ParseError);
    CHECK_THROWS_AS(parse_dot_cfg("digraph { a -- b; }"), ParseError);
}

TEST_CASE("dot: worked example matches the json fixture") {
    Cfg from_dot = parse_dot_cfg(read_fixture("fig3.dot"));
    Cfg from_json = load_json_fixture("fig3.json");
    CHECK(from_dot == from_json);
}

TEST_CASE("dot: serializer output parses back") {
    Cfg g = load_json_fixture("fig3.json");
    Cfg again = parse_dot_cfg(serialize_dot_cfg(g));
    CHECK(again == g);
}
