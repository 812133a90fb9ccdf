#include "pathbasis/purify.hpp"

#include <algorithm>
#include <sstream>

#include "graph_util.hpp"
#include "loops.hpp"
#include "pathbasis/errors.hpp"

namespace pathbasis {

using detail::GraphView;

const char* to_string(FlawKind k) {
    switch (k) {
    case FlawKind::UnreachableCode: return "UnreachableCode";
    case FlawKind::DeadEnd: return "DeadEnd";
    case FlawKind::MultipleEntries: return "MultipleEntries";
    case FlawKind::MultipleExits: return "MultipleExits";
    case FlawKind::HorribleLoop: return "HorribleLoop";
    case FlawKind::IrreducibleLoop: return "IrreducibleLoop";
    }
    return "?";
}

bool is_blocking(FlawKind k) {
    switch (k) {
    case FlawKind::UnreachableCode:
    case FlawKind::DeadEnd:
    case FlawKind::HorribleLoop:
    case FlawKind::IrreducibleLoop:
        return true;
    case FlawKind::MultipleEntries:
    case FlawKind::MultipleExits:
        return false;
    }
    return false;
}

FlawReport make_report(std::vector<Flaw> flaws) {
    FlawReport report;
    report.flaws = std::move(flaws);
    report.blocking = std::any_of(report.flaws.begin(), report.flaws.end(),
                                  [](const Flaw& f) { return is_blocking(f.kind); });
    return report;
}

namespace {

std::vector<NodeId> declared_entries(const Cfg& g) {
    std::vector<NodeId> entries;
    for (NodeId n = 0; n < g.node_count(); ++n) {
        if (n == g.begin() || g.node(n).kind == NodeKind::Begin) entries.push_back(n);
    }
    return entries;
}

std::vector<NodeId> declared_exits(const Cfg& g) {
    std::vector<NodeId> exits;
    for (NodeId n = 0; n < g.node_count(); ++n) {
        if (n == g.end() || g.node(n).kind == NodeKind::End) exits.push_back(n);
    }
    return exits;
}

std::string join_names(const Cfg& g, const std::vector<NodeId>& nodes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) out << ", ";
        out << g.node(nodes[i]).name;
    }
    return out.str();
}

std::string fresh_name(const Cfg& g, const std::string& base) {
    if (g.find(base) == kNoNode) return base;
    for (int i = 2;; ++i) {
        std::string name = base + "_" + std::to_string(i);
        if (g.find(name) == kNoNode) return name;
    }
}

// Loop pathology scan. Natural loops (header dominates every back-edge
// source) are healthy; any cyclic region left over once their back edges
// are set aside was entered past a header. A leftover region carrying a
// single independent cycle is a loop someone jumped into; two or more
// independent cycles mean loops that are neither nested nor consecutive.
void detect_loop_flaws(const Cfg& g, const std::vector<NodeId>& entries,
                       std::vector<Flaw>& out) {
    // Dominators need a single root; with several entries, analyze a copy
    // with a synthetic root in front (node/edge ids of g are unchanged).
    const Cfg* graph = &g;
    Cfg augmented;
    if (entries.size() > 1) {
        augmented = g;
        NodeId root = augmented.add_node(fresh_name(g, "__root"), NodeKind::Begin);
        for (NodeId n : entries) augmented.add_edge(root, n, "");
        augmented.set_begin(root);
        graph = &augmented;
    }
    GraphView view = detail::make_full_view(*graph);
    std::vector<NodeId> idom = detail::immediate_dominators(view);
    std::vector<EdgeId> back = detail::natural_back_edges(view, idom);

    // Literal nesting check on the natural loops themselves.
    std::vector<LoopGraph> loops = detail::natural_loops(view, back);
    for (std::size_t i = 0; i < loops.size(); ++i) {
        for (std::size_t j = i + 1; j < loops.size(); ++j) {
            const auto& a = loops[i].body;
            const auto& b = loops[j].body;
            std::vector<NodeId> shared;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(shared));
            if (shared.empty()) continue;
            bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
            bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
            if (!a_in_b && !b_in_a) {
                Flaw f;
                f.kind = FlawKind::HorribleLoop;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                               std::back_inserter(f.nodes));
                f.message = "loops headed at '" + g.node(loops[i].header).name +
                            "' and '" + g.node(loops[j].header).name +
                            "' overlap without nesting";
                out.push_back(std::move(f));
            }
        }
    }

    // Residual cyclic regions: reachable edges minus natural back edges.
    std::vector<bool> back_set(graph->edge_count(), false);
    for (EdgeId e : back) back_set[e] = true;
    std::vector<EdgeId> residual_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) { // synthetic root edges excluded
        if (back_set[e]) continue;
        if (idom[g.edge(e).from] == kNoNode || idom[g.edge(e).to] == kNoNode) {
            continue; // unreachable, reported separately
        }
        residual_edges.push_back(e);
    }
    GraphView residual =
        detail::make_subview(*graph, residual_edges, graph->begin(), graph->end());
    std::uint32_t count = 0;
    std::vector<std::uint32_t> comp =
        detail::strongly_connected_components(residual, count);

    std::vector<std::vector<NodeId>> members(count);
    for (NodeId n = 0; n < g.node_count(); ++n) {
        if (comp[n] != detail::kNoComponent) members[comp[n]].push_back(n);
    }
    std::vector<std::vector<EdgeId>> region_edges(count);
    std::vector<bool> cyclic(count, false);
    for (EdgeId e : residual_edges) {
        NodeId u = g.edge(e).from, w = g.edge(e).to;
        if (comp[u] == comp[w]) {
            region_edges[comp[u]].push_back(e);
            if (members[comp[u]].size() > 1 || u == w) cyclic[comp[u]] = true;
        }
    }

    std::vector<Flaw> regions;
    for (std::uint32_t c = 0; c < count; ++c) {
        if (!cyclic[c]) continue;
        int rank = static_cast<int>(region_edges[c].size()) -
                   static_cast<int>(members[c].size()) + 1;
        Flaw f;
        f.kind = rank >= 2 ? FlawKind::HorribleLoop : FlawKind::IrreducibleLoop;
        f.nodes = members[c];
        f.edges = region_edges[c];
        std::ostringstream msg;
        if (rank >= 2) {
            msg << rank << " intersecting loops through nodes " << join_names(g, f.nodes);
        } else {
            msg << "loop through nodes " << join_names(g, f.nodes)
                << " is entered other than through a single header";
        }
        f.message = msg.str();
        regions.push_back(std::move(f));
    }
    std::sort(regions.begin(), regions.end(), [](const Flaw& a, const Flaw& b) {
        return a.nodes.front() < b.nodes.front();
    });
    for (Flaw& f : regions) out.push_back(std::move(f));
}

} // namespace

FlawReport detect_flaws(const Cfg& g) {
    std::vector<Flaw> flaws;
    if (g.node_count() == 0) return make_report({});

    std::vector<NodeId> entries = declared_entries(g);
    std::vector<NodeId> exits = declared_exits(g);
    GraphView view = detail::make_full_view(g);
    std::vector<bool> fwd = detail::closure(view, entries, true);
    std::vector<bool> back = detail::closure(view, exits, false);

    std::vector<NodeId> unreachable, dead;
    for (NodeId n = 0; n < g.node_count(); ++n) {
        if (!fwd[n]) unreachable.push_back(n);
        if (!back[n]) dead.push_back(n);
    }
    if (!unreachable.empty()) {
        flaws.push_back(Flaw{FlawKind::UnreachableCode, unreachable, {},
                             "no entry point reaches: " + join_names(g, unreachable)});
    }
    if (!dead.empty()) {
        flaws.push_back(Flaw{FlawKind::DeadEnd, dead, {},
                             "cannot reach any exit: " + join_names(g, dead)});
    }
    if (entries.size() > 1) {
        flaws.push_back(Flaw{FlawKind::MultipleEntries, entries, {},
                             std::to_string(entries.size()) + " entry points: " +
                                 join_names(g, entries)});
    }
    if (exits.size() > 1) {
        flaws.push_back(Flaw{FlawKind::MultipleExits, exits, {},
                             std::to_string(exits.size()) + " exit points: " +
                                 join_names(g, exits)});
    }
    detect_loop_flaws(g, entries, flaws);
    return make_report(std::move(flaws));
}

namespace {

NodeKind demoted_kind(const Cfg& g, NodeId n, bool add_out_edge) {
    std::size_t out_degree = g.out_edges(n).size() + (add_out_edge ? 1 : 0);
    return out_degree >= 2 ? NodeKind::Decision : NodeKind::Action;
}

} // namespace

Cfg normalize_entries_exits(const Cfg& g) {
    if (g.node_count() == 0) {
        throw StructuralError("cannot normalize an empty graph");
    }
    std::vector<NodeId> entries = declared_entries(g);
    std::vector<NodeId> exits = declared_exits(g);
    if (entries.empty() || exits.empty()) {
        throw StructuralError("graph has no entry or no exit node");
    }
    if (entries.size() == 1 && exits.size() == 1) return g;

    Cfg out(g.name());
    for (NodeId n = 0; n < g.node_count(); ++n) {
        const Node& node = g.node(n);
        NodeKind kind = node.kind;
        if (entries.size() > 1 &&
            std::binary_search(entries.begin(), entries.end(), n)) {
            kind = demoted_kind(g, n, false);
        }
        if (exits.size() > 1 && std::binary_search(exits.begin(), exits.end(), n)) {
            kind = demoted_kind(g, n, true);
        }
        out.add_node(node.name, kind, node.line);
    }
    for (const Edge& e : g.edges()) out.add_edge(e.from, e.to, e.label);

    NodeId begin = g.begin(), end = g.end();
    if (entries.size() > 1) {
        begin = out.add_node(fresh_name(g, "__begin"), NodeKind::Begin);
        for (NodeId n : entries) out.add_edge(begin, n, "");
    }
    if (exits.size() > 1) {
        end = out.add_node(fresh_name(g, "__end"), NodeKind::End);
        for (NodeId n : exits) out.add_edge(n, end, "");
    }
    out.set_begin(begin);
    out.set_end(end);
    return out;
}

PurifyResult purify(const Cfg& g) {
    FlawReport raw = detect_flaws(g);
    bool needs_repair =
        std::any_of(raw.flaws.begin(), raw.flaws.end(), [](const Flaw& f) {
            return f.kind == FlawKind::MultipleEntries ||
                   f.kind == FlawKind::MultipleExits;
        });

    PurifyResult result{needs_repair ? normalize_entries_exits(g) : g, {}};
    FlawReport residual = detect_flaws(result.graph);

    std::vector<Flaw> flaws;
    for (const Flaw& f : raw.flaws) {
        if (f.kind == FlawKind::MultipleEntries || f.kind == FlawKind::MultipleExits) {
            Flaw resolved = f;
            resolved.message = "resolved by synthetic " +
                               std::string(f.kind == FlawKind::MultipleEntries
                                               ? "entry"
                                               : "exit") +
                               " node: " + f.message;
            flaws.push_back(std::move(resolved));
        }
    }
    for (Flaw& f : residual.flaws) flaws.push_back(std::move(f));
    result.report = make_report(std::move(flaws));
    return result;
}

} // namespace pathbasis
