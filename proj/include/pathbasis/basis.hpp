#ifndef PATHBASIS_BASIS_HPP
#define PATHBASIS_BASIS_HPP

#include <cstddef>
#include <vector>

#include "pathbasis/cfg.hpp"
#include "pathbasis/decompose.hpp"

namespace pathbasis {

/// Marks a segment of a path that is one traversal of a loop; rendered
/// in parentheses. Marks from nested loops nest.
struct LoopMark {
    std::size_t first = 0; // index of the first loop edge in Path::edges
    std::size_t last = 0;  // one past the final loop edge
    NodeId header = kNoNode;
};

/// A begin-to-end walk given as the sequence of traversed edge ids.
/// Consecutive edges share endpoints; an edge may appear twice when a
/// loop traversal re-uses part of the fall-through route.
struct Path {
    std::vector<EdgeId> edges;
    std::vector<LoopMark> loops;
};

struct PathSet {
    std::vector<Path> paths;
    std::size_t backbone_index = 0; // minimal edge count within the set
};

/// True when the edge sequence is a connected walk from `from` to `to`.
bool is_valid_walk(const Cfg& cfg, const std::vector<EdgeId>& edges,
                   NodeId from, NodeId to);

/// Shortest begin-to-end path by edge count; among equals, the
/// lexicographically smallest edge-id sequence. Throws StructuralError
/// when no begin-to-end path exists.
Path backbone(const Cfg& cfg);

/// Enumerates the paths of a trivial block: every parallel part must be
/// a simple arm, one path per arm, shortest arm as backbone. Throws
/// ContractError when a part has inner structure.
PathSet count_trivial(const Cfg& cfg, const Block& block);

/// Serial combination: every non-backbone path of one set is extended by
/// the other set's backbone, plus the two backbones concatenated. Sizes
/// obey |P| = |P1| + |P2| - 1. Throws ContractError on endpoint mismatch.
PathSet combine_paths(const Cfg& cfg, const PathSet& p1, const PathSet& p2);

/// Full basis of independent begin-to-end paths of a purified graph:
/// block-chain recursion over the loopless part, union across parallel
/// parts, loop subgraphs solved recursively (header split into an
/// entry/exit pair) and spliced into their stems. The result has exactly
/// e - v + 2 paths.
PathSet compute_paths(const Cfg& cfg);

} // namespace pathbasis

#endif
