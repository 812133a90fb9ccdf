#ifndef PATHBASIS_TEST_HELPERS_HPP
#define PATHBASIS_TEST_HELPERS_HPP

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathbasis/basis.hpp"
#include "pathbasis/cfg.hpp"
#include "pathbasis/ingest.hpp"
#include "pathbasis/minilang.hpp"
#include "pathbasis/verify.hpp"

namespace pbtest {

using namespace pathbasis;

inline std::string fixture_path(const std::string& name) {
    return std::string(PATHBASIS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Cfg load_json_fixture(const std::string& name) {
    return parse_json_cfg(read_fixture(name));
}

inline Cfg load_mini_fixture(const std::string& name) {
    return lower_ast(parse_minilang(read_fixture("mini/" + name)));
}

// begin -a-> end
inline Cfg single_edge_cfg() {
    Cfg g("single");
    NodeId b = g.add_node("begin", NodeKind::Begin);
    NodeId e = g.add_node("end", NodeKind::End);
    g.add_edge(b, e, "a");
    g.set_begin(b);
    g.set_end(e);
    return g;
}

// if/else diamond: begin -> {t|f} -> end
inline Cfg diamond_cfg() {
    Cfg g("diamond");
    NodeId b = g.add_node("begin", NodeKind::Begin);
    NodeId t = g.add_node("t", NodeKind::Action);
    NodeId f = g.add_node("f", NodeKind::Action);
    NodeId e = g.add_node("end", NodeKind::End);
    g.add_edge(b, t, "p");
    g.add_edge(b, f, "q");
    g.add_edge(t, e, "r");
    g.add_edge(f, e, "s");
    g.set_begin(b);
    g.set_end(e);
    return g;
}

// two diamonds in series sharing node m
inline Cfg two_diamonds_cfg() {
    Cfg g("two_diamonds");
    NodeId b = g.add_node("begin", NodeKind::Begin);
    NodeId x = g.add_node("x", NodeKind::Action);
    NodeId y = g.add_node("y", NodeKind::Action);
    NodeId m = g.add_node("m", NodeKind::Action);
    NodeId u = g.add_node("u", NodeKind::Action);
    NodeId v = g.add_node("v", NodeKind::Action);
    NodeId e = g.add_node("end", NodeKind::End);
    g.add_edge(b, x, "a");
    g.add_edge(b, y, "b");
    g.add_edge(x, m, "c");
    g.add_edge(y, m, "d");
    g.add_edge(m, u, "e");
    g.add_edge(m, v, "f");
    g.add_edge(u, e, "g");
    g.add_edge(v, e, "h");
    g.set_begin(b);
    g.set_end(e);
    return g;
}

inline std::string labels_of(const Cfg& g, const Path& p) {
    std::string out;
    for (EdgeId e : p.edges) out += g.edge(e).label;
    return out;
}

inline std::set<std::string> label_set(const Cfg& g, const PathSet& set) {
    std::set<std::string> out;
    for (const Path& p : set.paths) out.insert(labels_of(g, p));
    return out;
}

/// Test-side oracle: enumerate every begin-to-end walk that uses each
/// edge at most once (enough for acyclic graphs and simple-loop cases the
/// oracle is applied to) and return their count and GF(2) rank.
inline std::pair<int, int> enumerate_and_rank(const Cfg& g) {
    ClosedCfg closed = close_graph(g);
    BitMatrix m;
    m.width = closed.graph.edge_count();
    int count = 0;

    std::vector<EdgeId> walk;
    std::vector<bool> used(g.edge_count(), false);

    struct Frame {
        NodeId node;
        std::size_t next;
    };
    std::vector<Frame> stack{{g.begin(), 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.node == g.end() && f.next == 0) {
            ++count;
            Path p;
            p.edges = walk;
            m.rows.push_back(path_to_vector(p, closed));
        }
        if (f.next < g.out_edges(f.node).size()) {
            EdgeId e = g.out_edges(f.node)[f.next++];
            if (used[e]) continue;
            used[e] = true;
            walk.push_back(e);
            stack.push_back(Frame{g.edge(e).to, 0});
        } else {
            stack.pop_back();
            if (!walk.empty()) {
                used[walk.back()] = false;
                walk.pop_back();
            }
        }
    }
    return {count, rank_gf2(m)};
}

} // namespace pbtest

#endif
