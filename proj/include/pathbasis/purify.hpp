#ifndef PATHBASIS_PURIFY_HPP
#define PATHBASIS_PURIFY_HPP

#include <string>
#include <vector>

#include "pathbasis/cfg.hpp"

namespace pathbasis {

enum class FlawKind {
    UnreachableCode, // nodes no entry point can reach
    DeadEnd,         // nodes that cannot reach any exit point
    MultipleEntries, // more than one declared entry
    MultipleExits,   // more than one declared exit
    HorribleLoop,    // tangled cyclic region carrying several loops
    IrreducibleLoop, // a loop entered other than through its header
};

const char* to_string(FlawKind k);

/// Entry/exit multiplicity is auto-repairable; the rest require redesign
/// and block basis computation.
bool is_blocking(FlawKind k);

struct Flaw {
    FlawKind kind;
    std::vector<NodeId> nodes; // locus, ascending
    std::vector<EdgeId> edges; // locus, ascending
    std::string message;
};

struct FlawReport {
    std::vector<Flaw> flaws;
    bool blocking = false; // true iff any flaw kind is blocking

    bool clean() const { return flaws.empty(); }
};

FlawReport make_report(std::vector<Flaw> flaws);

/// Scans the graph for design flaws. Reachability is judged from the
/// declared entry points (the designated begin plus any further
/// Begin-kind nodes) and, backwards, from the declared exits; loop
/// pathologies are found by classifying the cyclic regions that remain
/// once all header-dominated back edges are accounted for.
FlawReport detect_flaws(const Cfg& cfg);

/// Repairs ill-formed procedures: with several declared entries a
/// synthetic begin node gains one edge to each former entry, and several
/// declared exits are funneled into a synthetic end node. Former
/// entry/exit nodes are re-kinded by their degree. Identity when the
/// graph is already single-entry/exit. Never removes nodes or edges.
Cfg normalize_entries_exits(const Cfg& cfg);

struct PurifyResult {
    Cfg graph;
    FlawReport report;
};

/// normalize_entries_exits followed by a re-scan. Repaired entry/exit
/// flaws stay in the report, marked resolved; residual blocking flaws
/// make the report blocking and halt the pipeline (unreachable code and
/// loop pathologies need human redesign, not automatic rewriting).
PurifyResult purify(const Cfg& cfg);

} // namespace pathbasis

#endif
