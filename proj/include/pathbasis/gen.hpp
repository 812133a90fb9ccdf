#ifndef PATHBASIS_GEN_HPP
#define PATHBASIS_GEN_HPP

#include <cstdint>

#include "pathbasis/cfg.hpp"

namespace pathbasis {

struct GenOptions {
    std::uint64_t seed = 0;
    int max_nodes = 60;
    int max_edges = 120;
};

/// Deterministic random single-entry/exit reducible CFG: a random
/// structured program (sequences, if/else, while, do-while, for, and
/// forward conditional jumps that cross block boundaries or break out of
/// loops) lowered to a graph. The result always passes purify cleanly.
Cfg random_reducible_cfg(const GenOptions& options);

} // namespace pathbasis

#endif
