#include "pathbasis/basis.hpp"

#include <algorithm>
#include <optional>

#include "decompose_internal.hpp"
#include "gf2.hpp"
#include "graph_util.hpp"
#include "pathbasis/errors.hpp"
#include "pathbasis/verify.hpp"

namespace pathbasis {

using detail::GraphView;

bool is_valid_walk(const Cfg& cfg, const std::vector<EdgeId>& edges,
                   NodeId from, NodeId to) {
    NodeId cur = from;
    for (EdgeId e : edges) {
        if (e >= cfg.edge_count()) return false;
        if (cfg.edge(e).from != cur) return false;
        cur = cfg.edge(e).to;
    }
    return cur == to;
}

namespace {

Path make_path(std::vector<EdgeId> edges) {
    Path p;
    p.edges = std::move(edges);
    return p;
}

Path concat(const Path& a, const Path& b) {
    Path out;
    out.edges = a.edges;
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    out.loops = a.loops;
    for (LoopMark m : b.loops) {
        m.first += a.edges.size();
        m.last += a.edges.size();
        out.loops.push_back(m);
    }
    return out;
}

// shortest first, lexicographically smallest edge sequence among equals
bool path_less(const Path& a, const Path& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
}

std::size_t min_path_index(const std::vector<Path>& paths) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < paths.size(); ++i) {
        if (path_less(paths[i], paths[best])) best = i;
    }
    return best;
}

NodeId path_start(const Cfg& cfg, const Path& p) {
    return cfg.edge(p.edges.front()).from;
}
NodeId path_end(const Cfg& cfg, const Path& p) {
    return cfg.edge(p.edges.back()).to;
}

// A simple arm is a branch-free walk consuming every edge of the part.
std::optional<Path> try_arm(const Cfg& cfg, const ParallelPart& part,
                            NodeId from, NodeId to) {
    GraphView v = detail::make_subview(cfg, part.edges, from, to);
    Path p;
    NodeId cur = from;
    while (p.edges.size() < part.edges.size()) {
        if (v.out[cur].size() != 1) return std::nullopt;
        EdgeId e = v.out[cur].front();
        p.edges.push_back(e);
        cur = v.to(e);
    }
    if (cur != to) return std::nullopt;
    return p;
}

// Base case for a part with inner structure but no interior cut vertex:
// one canonical path per edge (shortest route from the part entry to the
// edge, the edge, shortest route onward), kept greedily while the GF(2)
// rank grows. The candidate family provably spans the part's path space.
PathSet enumerate_base(const Cfg& cfg, const ParallelPart& part, NodeId from,
                       NodeId to) {
    GraphView v = detail::make_subview(cfg, part.edges, from, to);
    const std::size_t m = part.edges.size();
    std::vector<std::size_t> local(cfg.edge_count(), 0);
    for (std::size_t i = 0; i < m; ++i) local[part.edges[i]] = i;

    const int target =
        static_cast<int>(m) - static_cast<int>(v.node_count()) + 2;

    auto to_row = [&](const Path& p) {
        PathVector row(m + 1);
        for (EdgeId e : p.edges) row.flip(local[e]);
        row.set(m); // virtual coordinate shared by all begin-to-end paths
        return row;
    };

    std::vector<Path> candidates;
    candidates.push_back(make_path(detail::shortest_path(v, from, to)));
    for (EdgeId e : part.edges) {
        std::vector<EdgeId> route = detail::shortest_path(v, from, v.from(e));
        route.push_back(e);
        std::vector<EdgeId> tail = detail::shortest_path(v, v.to(e), to);
        route.insert(route.end(), tail.begin(), tail.end());
        candidates.push_back(make_path(std::move(route)));
    }

    PathSet out;
    detail::Gf2Basis span;
    for (Path& cand : candidates) {
        if (span.insert(to_row(cand))) {
            out.paths.push_back(std::move(cand));
            if (span.rank() == target) break;
        }
    }
    if (span.rank() != target) {
        throw ContractError("internal: per-edge candidates did not span a part");
    }
    out.backbone_index = 0;
    return out;
}

PathSet acyclic_paths(const Cfg& cfg, const std::vector<EdgeId>& edges,
                      NodeId from, NodeId to);

PathSet part_paths(const Cfg& cfg, const ParallelPart& part, NodeId from,
                   NodeId to) {
    if (std::optional<Path> arm = try_arm(cfg, part, from, to)) {
        PathSet single;
        single.paths.push_back(std::move(*arm));
        single.backbone_index = 0;
        return single;
    }
    std::vector<NodeId> cuts =
        detail::cut_vertices_between(cfg, part.edges, from, to);
    if (cuts.size() > 2) return acyclic_paths(cfg, part.edges, from, to);
    return enumerate_base(cfg, part, from, to);
}

bool block_is_trivial(const Cfg& cfg, const Block& block) {
    for (const ParallelPart& part : block.parts) {
        if (!try_arm(cfg, part, block.from, block.to)) return false;
    }
    return true;
}

PathSet block_paths(const Cfg& cfg, const Block& block) {
    if (block_is_trivial(cfg, block)) return count_trivial(cfg, block);
    PathSet out;
    for (const ParallelPart& part : block.parts) {
        PathSet sub = part_paths(cfg, part, block.from, block.to);
        for (Path& p : sub.paths) out.paths.push_back(std::move(p));
    }
    out.backbone_index = min_path_index(out.paths);
    return out;
}

PathSet acyclic_paths(const Cfg& cfg, const std::vector<EdgeId>& edges,
                      NodeId from, NodeId to) {
    BlockChain chain = detail::blocks_between(cfg, edges, from, to);
    PathSet acc;
    bool first = true;
    for (const Block& block : chain.blocks) {
        PathSet bp = block_paths(cfg, block);
        if (first) {
            acc = std::move(bp);
            first = false;
        } else {
            acc = combine_paths(cfg, acc, bp);
        }
    }
    return acc;
}

// The loop subgraph as its own begin-to-end problem: the header is split
// into an entry node (keeps outgoing internal edges) and a fresh return
// node that absorbs the edges into the header. Paths of this graph are
// exactly the single traversals of the loop.
struct SplitLoop {
    Cfg graph;
    std::vector<EdgeId> original; // local edge id -> parent edge id
};

SplitLoop split_loop(const Cfg& cfg, const LoopGraph& loop) {
    SplitLoop s;
    s.graph = Cfg(cfg.name() + "::loop@" + cfg.node(loop.header).name);
    std::vector<NodeId> local(cfg.node_count(), kNoNode);
    for (NodeId n : loop.body) {
        NodeKind kind = n == loop.header ? NodeKind::Begin : NodeKind::Action;
        local[n] = s.graph.add_node(cfg.node(n).name, kind, cfg.node(n).line);
    }
    NodeId ret = s.graph.add_node(cfg.node(loop.header).name + "__ret",
                                  NodeKind::End);
    for (EdgeId e : loop.internal_edges) {
        NodeId from = local[cfg.edge(e).from];
        NodeId to = cfg.edge(e).to == loop.header ? ret : local[cfg.edge(e).to];
        s.graph.add_edge(from, to, cfg.edge(e).label);
        s.original.push_back(e);
    }
    s.graph.set_begin(local[loop.header]);
    s.graph.set_end(ret);
    return s;
}

Path splice_loop(const std::vector<EdgeId>& stem, std::size_t at,
                 const Path& traversal, NodeId header) {
    Path out;
    out.edges.assign(stem.begin(), stem.begin() + at);
    out.edges.insert(out.edges.end(), traversal.edges.begin(),
                     traversal.edges.end());
    out.edges.insert(out.edges.end(), stem.begin() + at, stem.end());
    out.loops.push_back(LoopMark{at, at + traversal.edges.size(), header});
    for (LoopMark m : traversal.loops) {
        m.first += at;
        m.last += at;
        out.loops.push_back(m);
    }
    return out;
}

} // namespace

Path backbone(const Cfg& cfg) {
    if (!cfg.has_begin_end()) {
        throw StructuralError("graph has no designated begin/end nodes");
    }
    GraphView v = detail::make_full_view(cfg);
    std::vector<EdgeId> sp = detail::shortest_path(v, cfg.begin(), cfg.end());
    if (sp.empty() && cfg.begin() != cfg.end()) {
        throw StructuralError("no begin-to-end path exists");
    }
    return make_path(std::move(sp));
}

PathSet count_trivial(const Cfg& cfg, const Block& block) {
    PathSet out;
    for (const ParallelPart& part : block.parts) {
        std::optional<Path> arm = try_arm(cfg, part, block.from, block.to);
        if (!arm) {
            throw ContractError("block between '" + cfg.node(block.from).name +
                                "' and '" + cfg.node(block.to).name +
                                "' is not trivial: a part has inner structure");
        }
        out.paths.push_back(std::move(*arm));
    }
    if (out.paths.empty()) {
        throw ContractError("block has no parts");
    }
    out.backbone_index = min_path_index(out.paths);
    return out;
}

PathSet combine_paths(const Cfg& cfg, const PathSet& p1, const PathSet& p2) {
    if (p1.paths.empty()) return p2;
    if (p2.paths.empty()) return p1;
    NodeId junction = path_end(cfg, p1.paths.front());
    for (const Path& p : p1.paths) {
        if (path_end(cfg, p) != junction) {
            throw ContractError("combine_paths: first set has mixed endpoints");
        }
    }
    for (const Path& p : p2.paths) {
        if (path_start(cfg, p) != junction) {
            throw ContractError("combine_paths: sets do not meet at one node");
        }
    }
    const Path& b1 = p1.paths[p1.backbone_index];
    const Path& b2 = p2.paths[p2.backbone_index];
    PathSet out;
    out.paths.push_back(concat(b1, b2));
    for (std::size_t i = 0; i < p2.paths.size(); ++i) {
        if (i != p2.backbone_index) out.paths.push_back(concat(b1, p2.paths[i]));
    }
    for (std::size_t i = 0; i < p1.paths.size(); ++i) {
        if (i != p1.backbone_index) out.paths.push_back(concat(p1.paths[i], b2));
    }
    out.backbone_index = 0;
    return out;
}

PathSet compute_paths(const Cfg& cfg) {
    Decomposition d = decompose(cfg);
    PathSet result =
        acyclic_paths(cfg, d.loopless.edges, cfg.begin(), cfg.end());

    const Path& bb = result.paths[result.backbone_index];
    std::vector<EdgeId> backbone_edges = bb.edges;

    for (std::size_t i = 0; i < d.loops.size(); ++i) {
        ExtendedLoopGraph ext = extended_loop_graph(cfg, d, i, backbone_edges);
        SplitLoop split = split_loop(cfg, d.loops[i]);
        PathSet traversals = compute_paths(split.graph);
        for (const Path& local : traversals.paths) {
            Path traversal;
            traversal.edges.reserve(local.edges.size());
            for (EdgeId le : local.edges) {
                traversal.edges.push_back(split.original[le]);
            }
            traversal.loops = local.loops;
            result.paths.push_back(splice_loop(ext.stem, ext.splice_at, traversal,
                                               d.loops[i].header));
        }
    }
    return result;
}

} // namespace pathbasis
