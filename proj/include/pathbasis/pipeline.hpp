#ifndef PATHBASIS_PIPELINE_HPP
#define PATHBASIS_PIPELINE_HPP

#include "pathbasis/basis.hpp"
#include "pathbasis/cfg.hpp"
#include "pathbasis/decompose.hpp"
#include "pathbasis/purify.hpp"
#include "pathbasis/verify.hpp"

namespace pathbasis {

/// Outcome of the full planning pipeline: purify, close, decompose,
/// compute paths, verify. Blocking flaws abort after the flaw report.
struct TestPlan {
    Cfg graph;       // purified graph the plan refers to
    FlawReport flaws;
    bool aborted = false;
    ClosedCfg closed; // valid when not aborted
    int complexity = 0;
    Decomposition decomposition;
    PathSet paths;
    VerificationCertificate certificate;
};

TestPlan test_pipeline(const Cfg& input);

} // namespace pathbasis

#endif
