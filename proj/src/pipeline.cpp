#include "pathbasis/pipeline.hpp"

namespace pathbasis {

TestPlan test_pipeline(const Cfg& input) {
    TestPlan plan;
    PurifyResult purified = purify(input);
    plan.graph = std::move(purified.graph);
    plan.flaws = std::move(purified.report);
    if (plan.flaws.blocking) {
        plan.aborted = true;
        return plan;
    }
    plan.closed = close_graph(plan.graph);
    plan.complexity = cyclomatic_complexity(plan.closed);
    plan.decomposition = decompose(plan.graph);
    plan.paths = compute_paths(plan.graph);
    plan.certificate = verify_basis(plan.paths, plan.closed, plan.decomposition);
    return plan;
}

} // namespace pathbasis
