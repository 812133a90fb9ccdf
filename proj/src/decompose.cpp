#include "pathbasis/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "decompose_internal.hpp"
#include "graph_util.hpp"
#include "loops.hpp"
#include "pathbasis/errors.hpp"

namespace pathbasis {

using detail::GraphView;

std::vector<LoopGraph> find_loops(const Cfg& cfg) {
    GraphView view = detail::make_full_view(cfg);
    std::vector<NodeId> idom = detail::immediate_dominators(view);
    std::vector<EdgeId> back = detail::natural_back_edges(view, idom);

    // Reducibility: with the dominator back edges removed, nothing cyclic
    // may remain. Irreducible inputs are rejected upstream by purify.
    std::vector<bool> is_back(cfg.edge_count(), false);
    for (EdgeId e : back) is_back[e] = true;
    std::vector<EdgeId> residual;
    for (EdgeId e = 0; e < cfg.edge_count(); ++e) {
        if (!is_back[e]) residual.push_back(e);
    }
    GraphView rview = detail::make_subview(cfg, residual, cfg.begin(), cfg.end());
    if (!detail::is_acyclic(rview)) {
        throw ContractError(
            "graph has a cycle not headed by a dominator (irreducible); "
            "purify should have blocked it");
    }

    return detail::outermost_only(detail::natural_loops(view, back));
}

namespace {

// Shortest-route tree inside a loop: keeps, for every node that exits the
// loop, the BFS-first route from the header. Everything else internal to
// the loop is removed from the loopless part.
std::vector<EdgeId> kept_loop_edges(const Cfg& cfg, const LoopGraph& loop) {
    std::vector<bool> in_body(cfg.node_count(), false);
    for (NodeId n : loop.body) in_body[n] = true;

    std::vector<NodeId> exit_sources;
    for (NodeId n : loop.body) {
        for (EdgeId e : cfg.out_edges(n)) {
            if (!in_body[cfg.edge(e).to]) {
                exit_sources.push_back(n);
                break;
            }
        }
    }

    // BFS over internal edges from the header, taking edges in id order.
    std::vector<EdgeId> parent_edge(cfg.node_count(), static_cast<EdgeId>(-1));
    std::vector<bool> internal(cfg.edge_count(), false);
    for (EdgeId e : loop.internal_edges) internal[e] = true;
    std::vector<bool> seen(cfg.node_count(), false);
    std::deque<NodeId> queue;
    seen[loop.header] = true;
    queue.push_back(loop.header);
    while (!queue.empty()) {
        NodeId n = queue.front();
        queue.pop_front();
        for (EdgeId e : cfg.out_edges(n)) {
            if (!internal[e]) continue;
            NodeId w = cfg.edge(e).to;
            if (!seen[w]) {
                seen[w] = true;
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }

    std::set<EdgeId> kept;
    for (NodeId s : exit_sources) {
        NodeId cur = s;
        while (cur != loop.header && seen[cur]) {
            EdgeId e = parent_edge[cur];
            if (e == static_cast<EdgeId>(-1)) break;
            if (!kept.insert(e).second) break; // shared prefix already walked
            cur = cfg.edge(e).from;
        }
    }
    return {kept.begin(), kept.end()};
}

} // namespace

LooplessPart loopless_part(const Cfg& cfg, const std::vector<LoopGraph>& loops) {
    LooplessPart result;
    std::vector<bool> removed(cfg.edge_count(), false);
    for (const LoopGraph& loop : loops) {
        std::vector<EdgeId> kept = kept_loop_edges(cfg, loop);
        std::vector<bool> is_kept(cfg.edge_count(), false);
        for (EdgeId e : kept) is_kept[e] = true;
        std::vector<EdgeId> gone;
        for (EdgeId e : loop.internal_edges) {
            if (!is_kept[e]) {
                gone.push_back(e);
                removed[e] = true;
            }
        }
        result.removed.push_back(std::move(gone));
    }
    for (EdgeId e = 0; e < cfg.edge_count(); ++e) {
        if (!removed[e]) result.edges.push_back(e);
    }
    return result;
}

namespace {

// Undirected reachability from `from` to `to` in the view, optionally
// skipping one node.
bool undirected_connected(const GraphView& v, NodeId from, NodeId to, NodeId skip) {
    if (from == skip || to == skip) return false;
    std::vector<bool> seen(v.g->node_count(), false);
    std::deque<NodeId> queue;
    seen[from] = true;
    queue.push_back(from);
    while (!queue.empty()) {
        NodeId n = queue.front();
        queue.pop_front();
        if (n == to) return true;
        for (EdgeId e : v.out[n]) {
            NodeId w = v.to(e);
            if (w != skip && !seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
        for (EdgeId e : v.in[n]) {
            NodeId w = v.from(e);
            if (w != skip && !seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return false;
}

std::vector<NodeId> topological_order(const GraphView& v) {
    std::vector<int> indeg(v.g->node_count(), 0);
    for (EdgeId e : v.edges) ++indeg[v.to(e)];
    std::set<NodeId> ready;
    for (NodeId n : v.node_list()) {
        if (indeg[n] == 0) ready.insert(n);
    }
    std::vector<NodeId> order;
    while (!ready.empty()) {
        NodeId n = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(n);
        for (EdgeId e : v.out[n]) {
            if (--indeg[v.to(e)] == 0) ready.insert(v.to(e));
        }
    }
    return order;
}

} // namespace

std::vector<NodeId> detail::cut_vertices_between(const Cfg& cfg,
                                                 const std::vector<EdgeId>& edges,
                                                 NodeId from, NodeId to) {
    GraphView v = detail::make_subview(cfg, edges, from, to);
    std::vector<NodeId> cuts;
    for (NodeId n : v.node_list()) {
        if (n == v.begin || n == v.end) continue;
        if (!undirected_connected(v, v.begin, v.end, n)) cuts.push_back(n);
    }
    std::vector<NodeId> topo = topological_order(v);
    std::vector<int> position(cfg.node_count(), -1);
    for (std::size_t i = 0; i < topo.size(); ++i) {
        position[topo[i]] = static_cast<int>(i);
    }
    std::sort(cuts.begin(), cuts.end(),
              [&](NodeId a, NodeId b) { return position[a] < position[b]; });

    std::vector<NodeId> chain;
    chain.push_back(v.begin);
    chain.insert(chain.end(), cuts.begin(), cuts.end());
    chain.push_back(v.end);
    return chain;
}

std::vector<NodeId> find_cut_vertices(const Cfg& cfg,
                                      const std::vector<EdgeId>& edges) {
    return detail::cut_vertices_between(cfg, edges, cfg.begin(), cfg.end());
}

BlockChain detail::blocks_between(const Cfg& cfg, const std::vector<EdgeId>& edges,
                                  NodeId from, NodeId to) {
    GraphView v = detail::make_subview(cfg, edges, from, to);
    BlockChain chain;
    chain.cut_vertices = detail::cut_vertices_between(cfg, edges, from, to);

    std::vector<int> chain_pos(cfg.node_count(), -1);
    for (std::size_t i = 0; i < chain.cut_vertices.size(); ++i) {
        chain_pos[chain.cut_vertices[i]] = static_cast<int>(i);
    }

    // Components of the interior once all cut vertices are removed.
    std::vector<int> comp(cfg.node_count(), -1);
    int comp_count = 0;
    for (NodeId n : v.node_list()) {
        if (chain_pos[n] >= 0 || comp[n] >= 0) continue;
        std::deque<NodeId> queue{n};
        comp[n] = comp_count;
        while (!queue.empty()) {
            NodeId cur = queue.front();
            queue.pop_front();
            auto visit = [&](NodeId w) {
                if (chain_pos[w] < 0 && comp[w] < 0) {
                    comp[w] = comp_count;
                    queue.push_back(w);
                }
            };
            for (EdgeId e : v.out[cur]) visit(v.to(e));
            for (EdgeId e : v.in[cur]) visit(v.from(e));
        }
        ++comp_count;
    }

    // Each component sits between exactly two consecutive cut vertices;
    // direct cut-to-cut edges are their own trivial parts.
    std::size_t n_blocks = chain.cut_vertices.size() - 1;
    std::vector<std::map<int, ParallelPart>> block_comp_parts(n_blocks);
    std::vector<std::vector<ParallelPart>> block_direct_parts(n_blocks);

    std::vector<int> comp_block(comp_count, -1);
    auto place_component = [&](int c, int block) {
        if (comp_block[c] == -1) {
            comp_block[c] = block;
        } else if (comp_block[c] != block) {
            throw ContractError("internal: interior component touches "
                                "non-consecutive cut vertices");
        }
    };

    for (EdgeId e : v.edges) {
        NodeId from = v.from(e), to = v.to(e);
        bool from_cut = chain_pos[from] >= 0;
        bool to_cut = chain_pos[to] >= 0;
        if (from_cut && to_cut) {
            if (chain_pos[to] != chain_pos[from] + 1) {
                throw ContractError("internal: edge skips a cut vertex");
            }
            ParallelPart part;
            part.edges.push_back(e);
            block_direct_parts[chain_pos[from]].push_back(std::move(part));
        } else {
            int c = from_cut ? comp[to] : comp[from];
            if (from_cut) place_component(c, chain_pos[from]);
            if (to_cut) place_component(c, chain_pos[to] - 1);
        }
    }
    // second pass: attach edges to their component parts
    for (EdgeId e : v.edges) {
        NodeId from = v.from(e), to = v.to(e);
        bool from_cut = chain_pos[from] >= 0;
        bool to_cut = chain_pos[to] >= 0;
        if (from_cut && to_cut) continue;
        int c = from_cut ? comp[to] : comp[from];
        if (comp_block[c] == -1) {
            throw ContractError("internal: component not anchored to the chain");
        }
        block_comp_parts[comp_block[c]][c].edges.push_back(e);
    }
    for (NodeId n : v.node_list()) {
        if (chain_pos[n] >= 0) continue;
        int c = comp[n];
        if (comp_block[c] == -1) {
            throw ContractError("internal: component not anchored to the chain");
        }
        block_comp_parts[comp_block[c]][c].interior.push_back(n);
    }

    for (std::size_t b = 0; b < n_blocks; ++b) {
        Block block;
        block.from = chain.cut_vertices[b];
        block.to = chain.cut_vertices[b + 1];
        for (auto& [c, part] : block_comp_parts[b]) {
            std::sort(part.edges.begin(), part.edges.end());
            std::sort(part.interior.begin(), part.interior.end());
            block.parts.push_back(std::move(part));
        }
        for (ParallelPart& part : block_direct_parts[b]) {
            block.parts.push_back(std::move(part));
        }
        std::sort(block.parts.begin(), block.parts.end(),
                  [](const ParallelPart& a, const ParallelPart& b2) {
                      return a.edges.front() < b2.edges.front();
                  });
        for (const ParallelPart& part : block.parts) {
            block.edges.insert(block.edges.end(), part.edges.begin(),
                               part.edges.end());
        }
        std::sort(block.edges.begin(), block.edges.end());
        chain.blocks.push_back(std::move(block));
    }
    return chain;
}

BlockChain split_blocks(const Cfg& cfg, const std::vector<EdgeId>& edges) {
    return detail::blocks_between(cfg, edges, cfg.begin(), cfg.end());
}

namespace {

std::vector<NodeId> walk_nodes(const Cfg& cfg, const std::vector<EdgeId>& path,
                               NodeId start) {
    std::vector<NodeId> nodes{start};
    for (EdgeId e : path) nodes.push_back(cfg.edge(e).to);
    return nodes;
}

} // namespace

ExtendedLoopGraph extended_loop_graph(const Cfg& cfg, const Decomposition& d,
                                      std::size_t loop_index,
                                      const std::vector<EdgeId>& backbone) {
    const LoopGraph& loop = d.loops[loop_index];
    NodeId h = loop.header;
    ExtendedLoopGraph ext;
    ext.loop_index = loop_index;

    std::vector<NodeId> backbone_nodes = walk_nodes(cfg, backbone, cfg.begin());
    auto on_backbone =
        std::find(backbone_nodes.begin(), backbone_nodes.end(), h);
    if (on_backbone != backbone_nodes.end()) {
        ext.stem = backbone;
        ext.splice_at =
            static_cast<std::size_t>(on_backbone - backbone_nodes.begin());
        return ext;
    }

    // Off-backbone: locate the block whose interior holds the header, then
    // route through it with the fewest loopless edges.
    const Block* home = nullptr;
    for (const Block& block : d.chain.blocks) {
        for (const ParallelPart& part : block.parts) {
            if (std::binary_search(part.interior.begin(), part.interior.end(), h)) {
                home = &block;
                break;
            }
        }
        if (home) break;
    }
    if (!home) {
        throw ContractError("loop header unreachable from the loopless part");
    }

    GraphView bview = detail::make_subview(cfg, home->edges, home->from, home->to);
    std::vector<EdgeId> route_in = detail::shortest_path(bview, home->from, h);
    std::vector<EdgeId> route_out = detail::shortest_path(bview, h, home->to);
    if ((route_in.empty() && home->from != h) ||
        (route_out.empty() && home->to != h)) {
        throw ContractError("loop header unreachable from the loopless part");
    }

    // backbone prefix up to the block entry, suffix from the block exit
    std::size_t entry_pos = 0, exit_pos = backbone.size();
    for (std::size_t i = 0; i < backbone_nodes.size(); ++i) {
        if (backbone_nodes[i] == home->from) entry_pos = i;
        if (backbone_nodes[i] == home->to) exit_pos = i;
    }
    ext.stem.assign(backbone.begin(), backbone.begin() + entry_pos);
    ext.stem.insert(ext.stem.end(), route_in.begin(), route_in.end());
    ext.splice_at = ext.stem.size();
    ext.stem.insert(ext.stem.end(), route_out.begin(), route_out.end());
    ext.stem.insert(ext.stem.end(), backbone.begin() + exit_pos, backbone.end());
    return ext;
}

Decomposition decompose(const Cfg& cfg) {
    Decomposition d;
    d.loops = find_loops(cfg);
    d.loopless = loopless_part(cfg, d.loops);
    GraphView v = detail::make_subview(cfg, d.loopless.edges, cfg.begin(), cfg.end());
    if (!detail::is_acyclic(v)) {
        throw ContractError("internal: loopless part is not acyclic");
    }
    d.chain = split_blocks(cfg, d.loopless.edges);
    return d;
}

} // namespace pathbasis
