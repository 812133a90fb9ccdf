#include "graph_util.hpp"

#include <algorithm>
#include <deque>

namespace pathbasis::detail {

std::size_t GraphView::node_count() const {
    return static_cast<std::size_t>(std::count(has_node.begin(), has_node.end(), true));
}

std::vector<NodeId> GraphView::node_list() const {
    std::vector<NodeId> result;
    for (NodeId n = 0; n < has_node.size(); ++n) {
        if (has_node[n]) result.push_back(n);
    }
    return result;
}

GraphView make_full_view(const Cfg& g) {
    std::vector<EdgeId> all(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
    GraphView v = make_subview(g, all, g.begin(), g.end());
    v.has_node.assign(g.node_count(), true); // isolated nodes belong, too
    return v;
}

GraphView make_subview(const Cfg& g, const std::vector<EdgeId>& edges,
                       NodeId begin, NodeId end) {
    GraphView v;
    v.g = &g;
    v.begin = begin;
    v.end = end;
    v.edges = edges;
    std::sort(v.edges.begin(), v.edges.end());
    v.has_node.assign(g.node_count(), false);
    v.has_edge.assign(g.edge_count(), false);
    v.out.assign(g.node_count(), {});
    v.in.assign(g.node_count(), {});
    if (begin != kNoNode) v.has_node[begin] = true;
    if (end != kNoNode) v.has_node[end] = true;
    for (EdgeId e : v.edges) {
        const Edge& ed = g.edge(e);
        v.has_node[ed.from] = true;
        v.has_node[ed.to] = true;
        v.has_edge[e] = true;
        v.out[ed.from].push_back(e);
        v.in[ed.to].push_back(e);
    }
    return v;
}

std::vector<bool> closure(const GraphView& v, const std::vector<NodeId>& seeds,
                          bool forward) {
    std::vector<bool> seen(v.g->node_count(), false);
    std::deque<NodeId> queue;
    for (NodeId s : seeds) {
        if (s != kNoNode && v.has_node[s] && !seen[s]) {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        NodeId n = queue.front();
        queue.pop_front();
        const auto& adj = forward ? v.out[n] : v.in[n];
        for (EdgeId e : adj) {
            NodeId next = forward ? v.to(e) : v.from(e);
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    return seen;
}

namespace {

// Iterative DFS producing a postorder of the nodes reachable from begin,
// visiting out-edges in ascending edge-id order.
std::vector<NodeId> postorder_from_begin(const GraphView& v) {
    std::vector<NodeId> order;
    if (v.begin == kNoNode) return order;
    std::vector<bool> visited(v.g->node_count(), false);
    // frame: node + index into its out list
    std::vector<std::pair<NodeId, std::size_t>> stack;
    visited[v.begin] = true;
    stack.emplace_back(v.begin, 0);
    while (!stack.empty()) {
        auto& [n, i] = stack.back();
        if (i < v.out[n].size()) {
            NodeId next = v.to(v.out[n][i]);
            ++i;
            if (!visited[next]) {
                visited[next] = true;
                stack.emplace_back(next, 0);
            }
        } else {
            order.push_back(n);
            stack.pop_back();
        }
    }
    return order;
}

} // namespace

std::vector<NodeId> immediate_dominators(const GraphView& v) {
    std::vector<NodeId> idom(v.g->node_count(), kNoNode);
    if (v.begin == kNoNode) return idom;

    std::vector<NodeId> post = postorder_from_begin(v);
    std::vector<int> post_index(v.g->node_count(), -1);
    for (std::size_t i = 0; i < post.size(); ++i) {
        post_index[post[i]] = static_cast<int>(i);
    }

    auto intersect = [&](NodeId a, NodeId b) {
        while (a != b) {
            while (post_index[a] < post_index[b]) a = idom[a];
            while (post_index[b] < post_index[a]) b = idom[b];
        }
        return a;
    };

    idom[v.begin] = v.begin;
    bool changed = true;
    while (changed) {
        changed = false;
        // reverse postorder, skipping the root
        for (auto it = post.rbegin(); it != post.rend(); ++it) {
            NodeId n = *it;
            if (n == v.begin) continue;
            NodeId new_idom = kNoNode;
            for (EdgeId e : v.in[n]) {
                NodeId p = v.from(e);
                if (post_index[p] < 0 || idom[p] == kNoNode) continue;
                new_idom = (new_idom == kNoNode) ? p : intersect(p, new_idom);
            }
            if (new_idom != kNoNode && idom[n] != new_idom) {
                idom[n] = new_idom;
                changed = true;
            }
        }
    }
    return idom;
}

bool dominates(const std::vector<NodeId>& idom, NodeId a, NodeId b) {
    if (idom[b] == kNoNode) return false;
    NodeId n = b;
    while (true) {
        if (n == a) return true;
        if (idom[n] == n) return false;
        n = idom[n];
    }
}

std::vector<std::uint32_t> strongly_connected_components(const GraphView& v,
                                                          std::uint32_t& count) {
    const std::size_t n_total = v.g->node_count();
    std::vector<std::uint32_t> component(n_total, kNoComponent);
    std::vector<int> index(n_total, -1), low(n_total, 0);
    std::vector<bool> on_stack(n_total, false);
    std::vector<NodeId> scc_stack;
    int next_index = 0;
    count = 0;

    struct Frame {
        NodeId node;
        std::size_t edge_pos;
    };
    std::vector<Frame> call;

    for (NodeId root = 0; root < n_total; ++root) {
        if (!v.has_node[root] || index[root] != -1) continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge_pos < v.out[f.node].size()) {
                EdgeId e = v.out[f.node][f.edge_pos++];
                NodeId w = v.to(e);
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    scc_stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
            } else {
                if (low[f.node] == index[f.node]) {
                    while (true) {
                        NodeId w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = false;
                        component[w] = count;
                        if (w == f.node) break;
                    }
                    ++count;
                }
                NodeId done = f.node;
                call.pop_back();
                if (!call.empty()) {
                    low[call.back().node] = std::min(low[call.back().node], low[done]);
                }
            }
        }
    }
    return component;
}

std::vector<int> distance_to(const GraphView& v, NodeId target) {
    std::vector<int> dist(v.g->node_count(), -1);
    if (target == kNoNode || !v.has_node[target]) return dist;
    std::deque<NodeId> queue;
    dist[target] = 0;
    queue.push_back(target);
    while (!queue.empty()) {
        NodeId n = queue.front();
        queue.pop_front();
        for (EdgeId e : v.in[n]) {
            NodeId p = v.from(e);
            if (dist[p] == -1) {
                dist[p] = dist[n] + 1;
                queue.push_back(p);
            }
        }
    }
    return dist;
}

std::vector<EdgeId> shortest_path(const GraphView& v, NodeId from, NodeId to) {
    std::vector<EdgeId> path;
    std::vector<int> dist = distance_to(v, to);
    if (from == kNoNode || dist[from] == -1) return path;
    NodeId cur = from;
    while (cur != to) {
        // out lists are in ascending edge-id order, so the first edge that
        // keeps the distance decreasing is the lexicographic choice
        bool advanced = false;
        for (EdgeId e : v.out[cur]) {
            NodeId w = v.to(e);
            if (dist[w] == dist[cur] - 1) {
                path.push_back(e);
                cur = w;
                advanced = true;
                break;
            }
        }
        if (!advanced) break; // unreachable under dist map; defensive
    }
    return path;
}

bool is_acyclic(const GraphView& v) {
    std::uint32_t count = 0;
    std::vector<std::uint32_t> comp = strongly_connected_components(v, count);
    // acyclic iff every SCC is a single node without a self-loop
    std::vector<std::uint32_t> size(count, 0);
    for (NodeId n = 0; n < comp.size(); ++n) {
        if (comp[n] != kNoComponent) ++size[comp[n]];
    }
    for (EdgeId e : v.edges) {
        if (v.from(e) == v.to(e)) return false;
        if (comp[v.from(e)] == comp[v.to(e)] && size[comp[v.from(e)]] > 1) return false;
    }
    for (std::uint32_t c = 0; c < count; ++c) {
        if (size[c] > 1) return false;
    }
    return true;
}

} // namespace pathbasis::detail
