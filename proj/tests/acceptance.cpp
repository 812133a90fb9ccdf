// Acceptance suite: exercises the end-to-end contract on the bundled
// fixtures and on seeded random graph populations, one criterion per
// check, one PASS/FAIL line each. Exit status is the number of failed
// criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathbasis/basis.hpp"
#include "pathbasis/errors.hpp"
#include "pathbasis/gen.hpp"
#include "pathbasis/ingest.hpp"
#include "pathbasis/minilang.hpp"
#include "pathbasis/pipeline.hpp"
#include "pathbasis/purify.hpp"
#include "pathbasis/verify.hpp"

using namespace pathbasis;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
                what, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::string fixture(const std::string& name) {
    return std::string(PATHBASIS_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& name) {
    std::ifstream in(fixture(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Cfg load_json(const std::string& name) { return parse_json_cfg(slurp(name)); }

Cfg load_mini(const std::string& name) {
    return lower_ast(parse_minilang(slurp("mini/" + name)));
}

const std::vector<std::string> kCleanJsonFixtures = {
    "fig3.json", "crossbar.json", "two_entry.json", "three_exit.json"};
const std::vector<std::string> kMiniFixtures = {
    "straight.mini",    "if_else.mini",    "if_no_else.mini", "while.mini",
    "do_while.mini",    "do_while_rewrite.mini", "for.mini",
    "goto_forward.mini", "goto_backward.mini",   "nested_while.mini",
    "while_if.mini",    "mixed.mini"};

// every fixture the planning pipeline accepts (post-purify)
std::vector<std::pair<std::string, Cfg>> purified_fixtures() {
    std::vector<std::pair<std::string, Cfg>> out;
    for (const std::string& name : kCleanJsonFixtures) {
        out.emplace_back(name, purify(load_json(name)).graph);
    }
    for (const std::string& name : kMiniFixtures) {
        out.emplace_back(name, purify(load_mini(name)).graph);
    }
    return out;
}

std::string labels_of(const Cfg& g, const Path& p) {
    std::string out;
    for (EdgeId e : p.edges) out += g.edge(e).label;
    return out;
}

int rank_of(const ClosedCfg& closed, const std::vector<Path>& paths) {
    BitMatrix m;
    m.width = closed.graph.edge_count();
    for (const Path& p : paths) m.rows.push_back(path_to_vector(p, closed));
    return rank_gf2(m);
}

// --- criterion 1: worked-example reproduction --------------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    TestPlan plan = test_pipeline(load_json("fig3.json"));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::set<std::string> got;
    for (const Path& p : plan.paths.paths) got.insert(labels_of(plan.graph, p));
    std::set<std::string> want{"aef", "aehi", "acdf", "bg"};
    bool ok = !plan.aborted && got == want && plan.complexity == 4 && ms < 50;
    std::ostringstream detail;
    detail << "paths {";
    for (const Path& p : plan.paths.paths) {
        detail << " " << labels_of(plan.graph, p);
    }
    detail << " }, complexity " << plan.complexity << ", " << ms << " ms";
    report(1, "worked-example reproduction", ok, detail.str());
}

// --- criterion 2: dimension law ----------------------------------------

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    int checked = 0;
    bool ok = true;
    std::string first_bad;

    auto check_graph = [&](const std::string& name, const Cfg& g) {
        ClosedCfg closed = close_graph(g);
        int c = cyclomatic_complexity(closed);
        PathSet p = compute_paths(g);
        int rank = rank_of(closed, p.paths);
        ++checked;
        if (p.paths.size() != static_cast<std::size_t>(c) || rank != c) {
            ok = false;
            if (first_bad.empty()) {
                first_bad = name + " (|P|=" + std::to_string(p.paths.size()) +
                            ", rank=" + std::to_string(rank) +
                            ", C=" + std::to_string(c) + ")";
            }
        }
    };

    for (auto& [name, g] : purified_fixtures()) check_graph(name, g);
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        Cfg g = random_reducible_cfg({seed, 60, 120});
        check_graph("seed " + std::to_string(seed), g);
    }
    auto secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    ok = ok && secs < 30.0;
    std::ostringstream detail;
    detail << checked << " graphs, |basis| = rank = e-v+2, "
           << static_cast<int>(secs * 1000) << " ms";
    if (!first_bad.empty()) detail << ", first failure: " << first_bad;
    report(2, "dimension law", ok, detail.str());
}

// --- criterion 3: accounting identity ----------------------------------

void criterion_3() {
    bool ok = true;
    std::string bad;
    for (auto& [name, g] : purified_fixtures()) {
        TestPlan plan = test_pipeline(g);
        if (plan.aborted || plan.certificate.accounting.residual != 0) {
            ok = false;
            if (bad.empty()) bad = name;
        }
    }
    report(3, "accounting identity (residual 0)", ok,
           ok ? "all purified fixtures" : "first failure: " + bad);
}

// --- criterion 4: oracle span equivalence ------------------------------

void criterion_4() {
    bool ok = true;
    std::string bad;
    auto check = [&](const std::string& name, const Cfg& g) {
        ClosedCfg closed = close_graph(g);
        PathSet computed = compute_paths(g);
        PathSet brute = brute_force_basis(closed, 500000);
        std::vector<Path> all = computed.paths;
        all.insert(all.end(), brute.paths.begin(), brute.paths.end());
        int ra = rank_of(closed, computed.paths);
        int rb = rank_of(closed, brute.paths);
        int runion = rank_of(closed, all);
        if (!(ra == rb && rb == runion)) {
            ok = false;
            if (bad.empty()) bad = name;
        }
    };
    for (auto& [name, g] : purified_fixtures()) check(name, g);
    for (std::uint64_t seed = 2000; seed < 2200; ++seed) {
        Cfg g = random_reducible_cfg({seed, 25, 60});
        check("seed " + std::to_string(seed), g);
    }
    report(4, "oracle span equivalence", ok,
           ok ? "fixtures + 200 random graphs" : "first failure: " + bad);
}

// --- criterion 5: coverage guarantee -----------------------------------

void criterion_5() {
    bool ok = true;
    std::string bad;
    for (auto& [name, g] : purified_fixtures()) {
        TestPlan plan = test_pipeline(g);
        if (plan.aborted || !plan.certificate.missing_edges.empty() ||
            plan.certificate.covered_edges != plan.certificate.total_edges) {
            ok = false;
            if (bad.empty()) bad = name;
        }
    }
    report(5, "100% edge coverage", ok,
           ok ? "all purified fixtures" : "first failure: " + bad);
}

// --- criterion 6: flaw detection ---------------------------------------

void criterion_6() {
    bool ok = true;
    std::ostringstream detail;

    auto expect_kinds = [&](const std::string& name,
                            std::vector<FlawKind> want) {
        FlawReport r = detect_flaws(load_json(name));
        std::vector<FlawKind> got;
        for (const Flaw& f : r.flaws) got.push_back(f.kind);
        if (got != want) {
            ok = false;
            detail << name << " mismatched; ";
        }
    };
    expect_kinds("unreachable.json", {FlawKind::UnreachableCode});
    expect_kinds("deadend.json", {FlawKind::DeadEnd});
    expect_kinds("two_entry.json", {FlawKind::MultipleEntries});
    expect_kinds("three_exit.json", {FlawKind::MultipleExits});
    expect_kinds("intersecting_loops.json", {FlawKind::HorribleLoop});
    expect_kinds("jump_into_loop.json", {FlawKind::IrreducibleLoop});

    // entry/exit cases normalize to a single entry and a single exit
    for (const char* name : {"two_entry.json", "three_exit.json"}) {
        PurifyResult r = purify(load_json(name));
        int sources = 0, sinks = 0;
        for (NodeId n = 0; n < r.graph.node_count(); ++n) {
            if (r.graph.in_edges(n).empty()) ++sources;
            if (r.graph.out_edges(n).empty()) ++sinks;
        }
        if (sources != 1 || sinks != 1 || r.report.blocking) {
            ok = false;
            detail << name << " not normalized; ";
        }
    }
    report(6, "flaw detection and auto-normalization", ok, detail.str());
}

// --- criterion 7: lowering soundness -----------------------------------

void criterion_7() {
    bool ok = true;
    std::ostringstream detail;
    for (const std::string& name : kMiniFixtures) {
        std::string text = slurp("mini/" + name);
        // first line records the hand-computed complexity: // C = N
        int want = -1;
        std::size_t eq = text.find('=');
        if (text.rfind("// C", 0) == 0 && eq != std::string::npos) {
            want = std::stoi(text.substr(eq + 1));
        }
        Cfg g = load_mini(name);
        int got = cyclomatic_complexity(close_graph(g));
        if (want < 0 || got != want) {
            ok = false;
            detail << name << " expected " << want << " got " << got << "; ";
        }
    }
    int dw = cyclomatic_complexity(close_graph(load_mini("do_while.mini")));
    int tw = cyclomatic_complexity(close_graph(load_mini("do_while_rewrite.mini")));
    if (dw != tw) {
        ok = false;
        detail << "do-while twin mismatch; ";
    }
    report(7, "lowering soundness (12 programs)", ok, detail.str());
}

// --- criterion 8: substitution behavior --------------------------------

void criterion_8() {
    Cfg g = load_json("fig3.json");
    ClosedCfg closed = close_graph(g);
    Decomposition d = decompose(g);
    PathSet basis = compute_paths(g);
    PathSet brute = brute_force_basis(closed, 100000);
    bool ok = true;
    std::ostringstream detail;

    for (std::size_t i = 0; i < basis.paths.size(); ++i) {
        if (i == basis.backbone_index) continue;
        try {
            PathSet next = substitute_path(basis, i, brute.paths, closed);
            if (!verify_basis(next, closed, d).is_basis) {
                ok = false;
                detail << "reject " << labels_of(g, basis.paths[i])
                       << " not restored; ";
            }
        } catch (const Error& e) {
            ok = false;
            detail << "reject " << labels_of(g, basis.paths[i]) << ": "
                   << e.what() << "; ";
        }
    }

    // offering only in-span candidates must fail loudly
    std::vector<Path> in_span;
    for (std::size_t i = 0; i < basis.paths.size(); ++i) {
        if (i != 1) in_span.push_back(basis.paths[i]);
    }
    bool failed_as_expected = false;
    try {
        substitute_path(basis, 1, in_span, closed);
    } catch (const SubstituteError&) {
        failed_as_expected = true;
    }
    if (!failed_as_expected) {
        ok = false;
        detail << "in-span candidates were accepted; ";
    }
    report(8, "base-path substitution", ok, detail.str());
}

} // namespace

int main() {
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
    } catch (const std::exception& e) {
        std::printf("FAIL suite aborted: %s\n", e.what());
        return failures + 1;
    }
    std::printf("%s\n", failures == 0 ? "all criteria passed"
                                      : "some criteria FAILED");
    return failures;
}
