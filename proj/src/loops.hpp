#ifndef PATHBASIS_LOOPS_HPP
#define PATHBASIS_LOOPS_HPP

// Internal natural-loop helpers shared by purify and decompose.

#include <vector>

#include "graph_util.hpp"
#include "pathbasis/decompose.hpp"

namespace pathbasis::detail {

/// Edges u->h where h dominates u (u reachable from the view's begin).
std::vector<EdgeId> natural_back_edges(const GraphView& v,
                                       const std::vector<NodeId>& idom);

/// Natural loops of the given back edges, merged per shared header.
/// Each loop's body is the header plus everything that reaches one of
/// its back-edge sources without passing through the header.
std::vector<LoopGraph> natural_loops(const GraphView& v,
                                     const std::vector<EdgeId>& back_edges);

/// Keeps only loops not contained in another loop's body.
std::vector<LoopGraph> outermost_only(std::vector<LoopGraph> loops);

} // namespace pathbasis::detail

#endif
