#include "loops.hpp"

#include <algorithm>
#include <map>

namespace pathbasis::detail {

std::vector<EdgeId> natural_back_edges(const GraphView& v,
                                       const std::vector<NodeId>& idom) {
    std::vector<EdgeId> result;
    for (EdgeId e : v.edges) {
        NodeId u = v.from(e);
        NodeId h = v.to(e);
        if (idom[u] == kNoNode || idom[h] == kNoNode) continue; // unreachable
        if (dominates(idom, h, u)) result.push_back(e);
    }
    return result;
}

std::vector<LoopGraph> natural_loops(const GraphView& v,
                                     const std::vector<EdgeId>& back_edges) {
    std::map<NodeId, std::vector<EdgeId>> by_header;
    for (EdgeId e : back_edges) by_header[v.to(e)].push_back(e);

    std::vector<LoopGraph> loops;
    for (auto& [header, edges] : by_header) {
        LoopGraph loop;
        loop.header = header;
        loop.back_edges = edges;
        std::vector<bool> in_body(v.g->node_count(), false);
        in_body[header] = true;
        std::vector<NodeId> stack;
        for (EdgeId e : edges) {
            NodeId u = v.from(e);
            if (!in_body[u]) {
                in_body[u] = true;
                stack.push_back(u);
            }
        }
        while (!stack.empty()) {
            NodeId n = stack.back();
            stack.pop_back();
            for (EdgeId e : v.in[n]) {
                NodeId p = v.from(e);
                if (!in_body[p]) {
                    in_body[p] = true;
                    stack.push_back(p);
                }
            }
        }
        for (NodeId n = 0; n < in_body.size(); ++n) {
            if (in_body[n]) loop.body.push_back(n);
        }
        for (EdgeId e : v.edges) {
            if (in_body[v.from(e)] && in_body[v.to(e)]) {
                loop.internal_edges.push_back(e);
            }
        }
        loops.push_back(std::move(loop));
    }
    // order loops by their first back edge for reproducible output
    std::sort(loops.begin(), loops.end(), [](const LoopGraph& a, const LoopGraph& b) {
        return a.back_edges.front() < b.back_edges.front();
    });
    return loops;
}

std::vector<LoopGraph> outermost_only(std::vector<LoopGraph> loops) {
    std::vector<bool> keep(loops.size(), true);
    for (std::size_t i = 0; i < loops.size(); ++i) {
        for (std::size_t j = 0; j < loops.size() && keep[i]; ++j) {
            if (i == j) continue;
            if (loops[j].body.size() <= loops[i].body.size()) continue;
            if (std::includes(loops[j].body.begin(), loops[j].body.end(),
                              loops[i].body.begin(), loops[i].body.end())) {
                keep[i] = false;
            }
        }
    }
    std::vector<LoopGraph> result;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        if (keep[i]) result.push_back(std::move(loops[i]));
    }
    return result;
}

} // namespace pathbasis::detail
