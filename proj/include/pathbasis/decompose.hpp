#ifndef PATHBASIS_DECOMPOSE_HPP
#define PATHBASIS_DECOMPOSE_HPP

#include <vector>

#include "pathbasis/cfg.hpp"

namespace pathbasis {

/// An outermost natural loop: the header, the full body (nested loops
/// included), the back edges targeting the header, and every edge whose
/// endpoints both lie in the body.
struct LoopGraph {
    NodeId header = kNoNode;
    std::vector<NodeId> body;           // ascending
    std::vector<EdgeId> back_edges;     // ascending
    std::vector<EdgeId> internal_edges; // ascending, includes back edges

    /// Independent cycles contributed by this loop: internal edge count
    /// minus body size plus one (the circuit rank of the loop subgraph).
    int contribution() const {
        return static_cast<int>(internal_edges.size()) -
               static_cast<int>(body.size()) + 1;
    }
};

/// One edge-disjoint parallel part of a block: either a direct edge
/// between the block's delimiting cut vertices or a connected component
/// of the block interior together with its edges.
struct ParallelPart {
    std::vector<EdgeId> edges;      // ascending
    std::vector<NodeId> interior;   // ascending, excludes the delimiters
};

/// Subgraph between two consecutive cut vertices of the loopless part.
struct Block {
    NodeId from = kNoNode;
    NodeId to = kNoNode;
    std::vector<EdgeId> edges; // ascending, union of the parts
    std::vector<ParallelPart> parts; // ordered by smallest edge id
};

/// Cut-vertex chain of an acyclic single-entry/exit graph. Every
/// begin-to-end path visits the cut vertices in order; consecutive pairs
/// delimit the blocks, whose edges partition the graph's edges.
struct BlockChain {
    std::vector<NodeId> cut_vertices; // begin, c1, ..., ck, end
    std::vector<Block> blocks;
};

/// The loopless residue of a purified graph: the surviving edges (in
/// original order) once each outermost loop keeps only the shortest
/// routes from its header to its exit points.
struct LooplessPart {
    std::vector<EdgeId> edges;                 // ascending original ids
    std::vector<std::vector<EdgeId>> removed;  // per loop, ascending
};

/// A loop together with a begin-to-end walk to splice it into.
struct ExtendedLoopGraph {
    std::size_t loop_index = 0;
    std::vector<EdgeId> stem;  // begin-to-end path through the loop header
    std::size_t splice_at = 0; // position in stem where the header occurs
};

/// Complete structural analysis of a purified graph, consumed by the
/// basis construction and by certificate accounting.
struct Decomposition {
    std::vector<LoopGraph> loops; // outermost, ordered by first back edge
    LooplessPart loopless;
    BlockChain chain;             // of the loopless part
};

/// Outermost natural loops of a purified (reducible) graph. Nested loops
/// are merged into the outermost one; consecutive loops stay separate.
/// Throws ContractError when a cycle remains that no dominator-targeting
/// back edge explains (irreducible input escaped purify).
std::vector<LoopGraph> find_loops(const Cfg& cfg);

/// Removes each loop's edges except the shortest header-to-exit routes
/// that keep the rest of the graph connected. The result is acyclic.
LooplessPart loopless_part(const Cfg& cfg, const std::vector<LoopGraph>& loops);

/// Begin-to-end separating articulation points of the undirected shadow,
/// in topological order, with begin and end as sentinels.
std::vector<NodeId> find_cut_vertices(const Cfg& cfg,
                                      const std::vector<EdgeId>& edges);

/// Splits the loopless part into the cut-vertex block chain and each
/// block into its parallel parts.
BlockChain split_blocks(const Cfg& cfg, const std::vector<EdgeId>& edges);

/// Stem for a loop: the backbone itself when the header lies on it,
/// otherwise the backbone outside the header's block spliced with the
/// shortest block-internal route through the header. Paths are edge-id
/// sequences over the loopless part.
ExtendedLoopGraph extended_loop_graph(const Cfg& cfg, const Decomposition& d,
                                      std::size_t loop_index,
                                      const std::vector<EdgeId>& backbone);

/// Runs find_loops, loopless_part and split_blocks in one sweep.
Decomposition decompose(const Cfg& cfg);

} // namespace pathbasis

#endif
