#include "pathbasis/verify.hpp"

#include <algorithm>
#include <set>

#include "gf2.hpp"
#include "graph_util.hpp"
#include "loops.hpp"
#include "pathbasis/errors.hpp"

namespace pathbasis {

int rank_gf2(const BitMatrix& m) {
    detail::Gf2Basis basis;
    for (const PathVector& row : m.rows) basis.insert(row);
    return basis.rank();
}

PathVector path_to_vector(const Path& path, const ClosedCfg& closed) {
    const std::size_t e = closed.original_edge_count();
    PathVector v(e + 1);
    for (EdgeId edge : path.edges) {
        if (edge >= e) {
            throw ContractError("edge id " + std::to_string(edge) +
                                " out of range (graph has " + std::to_string(e) +
                                " edges)");
        }
        v.flip(edge); // even traversals cancel mod 2
    }
    v.set(e); // the closing virtual edge
    return v;
}

namespace {

Accounting make_accounting(const ClosedCfg& closed, const Decomposition& d) {
    Accounting acc;
    const Cfg& g = closed.graph;
    int total = 1; // the backbone, shared by every block
    for (const Block& block : d.chain.blocks) {
        std::set<NodeId> nodes;
        for (EdgeId e : block.edges) {
            nodes.insert(g.edge(e).from);
            nodes.insert(g.edge(e).to);
        }
        BlockTerm term;
        term.from = block.from;
        term.to = block.to;
        term.complexity = static_cast<int>(block.edges.size()) -
                          static_cast<int>(nodes.size()) + 2;
        total += term.complexity - 1;
        acc.blocks.push_back(term);
    }
    for (const LoopGraph& loop : d.loops) {
        LoopTerm term;
        term.header = loop.header;
        term.contribution = loop.contribution();
        total += term.contribution;
        acc.loops.push_back(term);
    }
    acc.residual = cyclomatic_complexity(closed) - total;
    return acc;
}

std::size_t shortest_index(const std::vector<Path>& paths) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < paths.size(); ++i) {
        if (paths[i].edges.size() < paths[best].edges.size() ||
            (paths[i].edges.size() == paths[best].edges.size() &&
             paths[i].edges < paths[best].edges)) {
            best = i;
        }
    }
    return best;
}

} // namespace

VerificationCertificate verify_basis(const PathSet& paths, const ClosedCfg& closed,
                                     const Decomposition& decomposition) {
    VerificationCertificate cert;
    cert.complexity = cyclomatic_complexity(closed);
    cert.path_count = paths.paths.size();
    cert.total_edges = closed.original_edge_count();

    detail::Gf2Basis span;
    std::vector<bool> covered(cert.total_edges, false);
    for (const Path& p : paths.paths) {
        span.insert(path_to_vector(p, closed));
        for (EdgeId e : p.edges) covered[e] = true; // walk coverage, not mod 2
    }
    cert.rank = span.rank();
    for (EdgeId e = 0; e < cert.total_edges; ++e) {
        if (covered[e]) {
            ++cert.covered_edges;
        } else {
            cert.missing_edges.push_back(e);
        }
    }
    cert.accounting = make_accounting(closed, decomposition);
    cert.is_basis = cert.rank == cert.complexity &&
                    cert.path_count == static_cast<std::size_t>(cert.complexity) &&
                    cert.missing_edges.empty();
    return cert;
}

PathSet substitute_path(const PathSet& basis, std::size_t rejected,
                        const std::vector<Path>& candidates,
                        const ClosedCfg& closed) {
    if (rejected >= basis.paths.size()) {
        throw ContractError("rejected path index out of range");
    }
    const Cfg& base = closed.graph;
    NodeId begin = base.begin();
    // the closed graph's end is the virtual edge's source
    NodeId end = base.edge(closed.virtual_edge).from;

    detail::Gf2Basis remaining;
    for (std::size_t i = 0; i < basis.paths.size(); ++i) {
        if (i != rejected) remaining.insert(path_to_vector(basis.paths[i], closed));
    }
    for (const Path& cand : candidates) {
        if (!is_valid_walk(base, cand.edges, begin, end)) {
            throw ContractError("candidate path is not a valid begin-to-end walk");
        }
        if (!remaining.in_span(path_to_vector(cand, closed))) {
            PathSet out = basis;
            out.paths[rejected] = cand;
            out.backbone_index = shortest_index(out.paths);
            return out;
        }
    }
    throw SubstituteError(
        "no independent substitute: every candidate lies in the span of the " +
        std::to_string(basis.paths.size() - 1) + " remaining paths (rank " +
        std::to_string(remaining.rank()) + " of " +
        std::to_string(cyclomatic_complexity(closed)) + ")");
}

PathSet brute_force_basis(const ClosedCfg& closed, int path_budget) {
    const Cfg& g = closed.graph;
    NodeId begin = g.begin();
    NodeId end = g.edge(closed.virtual_edge).from;

    // Use the original (open) graph only.
    std::vector<EdgeId> open_edges;
    for (EdgeId e = 0; e < closed.original_edge_count(); ++e) {
        open_edges.push_back(e);
    }
    detail::GraphView view = detail::make_subview(g, open_edges, begin, end);
    std::vector<NodeId> idom = detail::immediate_dominators(view);
    std::vector<EdgeId> back = detail::natural_back_edges(view, idom);
    std::vector<bool> is_back(g.edge_count(), false);
    for (EdgeId e : back) is_back[e] = true;

    const int target = cyclomatic_complexity(closed);

    PathSet out;
    detail::Gf2Basis span;
    int enumerated = 0;

    // Depth-first over out-edges in id order; every back edge may be
    // taken at most once per path, which caps walks at one traversal per
    // simple loop and keeps the enumeration finite.
    struct Frame {
        NodeId node;
        std::size_t next; // out-edge position to try next
    };
    std::vector<Frame> stack{{begin, 0}};
    std::vector<EdgeId> walk;
    std::vector<int> back_used(g.edge_count(), 0);

    auto emit = [&]() {
        ++enumerated;
        Path p;
        p.edges = walk;
        if (span.insert(path_to_vector(p, closed))) {
            out.paths.push_back(std::move(p));
        }
    };

    if (begin == end) {
        throw ContractError("degenerate graph: begin equals end");
    }

    while (!stack.empty()) {
        if (span.rank() == target || enumerated >= path_budget) break;
        Frame& f = stack.back();
        if (f.node == end && f.next == 0) {
            emit();
            // end has no out-edges in a purified graph; fall through to pop
        }
        if (f.next < view.out[f.node].size()) {
            EdgeId e = view.out[f.node][f.next++];
            if (is_back[e] && back_used[e] > 0) continue;
            if (is_back[e]) ++back_used[e];
            walk.push_back(e);
            stack.push_back(Frame{view.to(e), 0});
        } else {
            stack.pop_back();
            if (!walk.empty()) {
                EdgeId e = walk.back();
                walk.pop_back();
                if (is_back[e]) --back_used[e];
            }
        }
    }

    if (span.rank() != target) {
        throw EnumerationError(
            "enumeration reached rank " + std::to_string(span.rank()) + " of " +
            std::to_string(target) + " after " + std::to_string(enumerated) +
            " paths (budget " + std::to_string(path_budget) + ")");
    }
    out.backbone_index = shortest_index(out.paths);
    return out;
}

} // namespace pathbasis
