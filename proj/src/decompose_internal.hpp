#ifndef PATHBASIS_DECOMPOSE_INTERNAL_HPP
#define PATHBASIS_DECOMPOSE_INTERNAL_HPP

// Block analysis between arbitrary endpoints, used by the recursive
// basis construction on sub-blocks and parallel parts.

#include "pathbasis/decompose.hpp"

namespace pathbasis::detail {

std::vector<NodeId> cut_vertices_between(const Cfg& cfg,
                                         const std::vector<EdgeId>& edges,
                                         NodeId from, NodeId to);

BlockChain blocks_between(const Cfg& cfg, const std::vector<EdgeId>& edges,
                          NodeId from, NodeId to);

} // namespace pathbasis::detail

#endif
