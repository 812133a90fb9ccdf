#ifndef PATHBASIS_GRAPH_UTIL_HPP
#define PATHBASIS_GRAPH_UTIL_HPP

// Internal graph helpers shared by purify, decompose and basis: subgraph
// views that keep the parent's node/edge ids, immediate dominators,
// strongly connected components and deterministic shortest paths.

#include <vector>

#include "pathbasis/cfg.hpp"

namespace pathbasis::detail {

/// Lightweight subgraph view. Nodes and edges keep the ids of the parent
/// Cfg so that paths assembled on a view are directly meaningful on the
/// full graph.
struct GraphView {
    const Cfg* g = nullptr;
    NodeId begin = kNoNode;
    NodeId end = kNoNode;
    std::vector<EdgeId> edges;          // ascending parent edge ids
    std::vector<bool> has_node;         // indexed by parent NodeId
    std::vector<bool> has_edge;         // indexed by parent EdgeId
    std::vector<std::vector<EdgeId>> out, in; // indexed by parent NodeId

    std::size_t node_count() const;
    std::vector<NodeId> node_list() const; // ascending

    NodeId from(EdgeId e) const { return g->edge(e).from; }
    NodeId to(EdgeId e) const { return g->edge(e).to; }
};

GraphView make_full_view(const Cfg& g);
GraphView make_subview(const Cfg& g, const std::vector<EdgeId>& edges,
                       NodeId begin, NodeId end);

/// Forward (or backward) closure from a set of seed nodes, restricted to
/// the view's edges.
std::vector<bool> closure(const GraphView& v, const std::vector<NodeId>& seeds,
                          bool forward);

/// Immediate dominators for the part of the view reachable from its begin
/// node (iterative algorithm over reverse postorder). idom[begin] = begin;
/// unreachable nodes get kNoNode.
std::vector<NodeId> immediate_dominators(const GraphView& v);

/// True iff a dominates b (equal nodes dominate themselves).
bool dominates(const std::vector<NodeId>& idom, NodeId a, NodeId b);

/// Strongly connected components over the view, Tarjan's algorithm with
/// an explicit stack. Returns one component id per parent node
/// (kNoComponent for nodes outside the view); ids are deterministic.
inline constexpr std::uint32_t kNoComponent = static_cast<std::uint32_t>(-1);
std::vector<std::uint32_t> strongly_connected_components(const GraphView& v,
                                                          std::uint32_t& count);

/// BFS edge distance from every node to `target` following edges
/// backwards; unreachable nodes get -1.
std::vector<int> distance_to(const GraphView& v, NodeId target);

/// Deterministic shortest path from `from` to `to`: minimal edge count,
/// ties broken by always taking the smallest usable edge id next (the
/// lexicographically smallest edge-id sequence among shortest paths).
/// Empty result means unreachable (or from == to).
std::vector<EdgeId> shortest_path(const GraphView& v, NodeId from, NodeId to);

/// True when the view contains no directed cycle.
bool is_acyclic(const GraphView& v);

} // namespace pathbasis::detail

#endif
