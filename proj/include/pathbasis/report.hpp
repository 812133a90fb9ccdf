#ifndef PATHBASIS_REPORT_HPP
#define PATHBASIS_REPORT_HPP

#include <string>

#include "pathbasis/pipeline.hpp"

namespace pathbasis {

/// Label sequence of a path with loop traversals in parentheses. When
/// every labeled edge of the graph has a one-character label the tokens
/// are concatenated ("aef", "xn(o)py" style); otherwise they are joined
/// with spaces. Unlabeled edges print as "#<edge id>".
std::string path_text(const Cfg& cfg, const Path& path);

std::string flaw_report_text(const Cfg& cfg, const FlawReport& report);
std::string certificate_text(const Cfg& cfg, const VerificationCertificate& cert);
std::string plan_text(const TestPlan& plan);

std::string flaw_report_json(const Cfg& cfg, const FlawReport& report);
std::string certificate_json(const Cfg& cfg, const VerificationCertificate& cert);
std::string decomposition_json(const Cfg& cfg, const Decomposition& d);

/// TestPlan JSON: {"complexity", "paths": [{"edges", "labels", "role"}],
/// "verification", "flaws"} plus "decomposition" on request.
std::string plan_json(const TestPlan& plan, bool include_decomposition = false);

/// DOT rendering of the plan: the purified graph with, per edge, the list
/// of basis paths that traverse it ("paths" attribute), so plans diff as
/// plain text.
std::string plan_dot(const TestPlan& plan);

} // namespace pathbasis

#endif
