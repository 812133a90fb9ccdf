#include <doctest.h>

#include "helpers.hpp"
#include "pathbasis/gen.hpp"
#include "pathbasis/pipeline.hpp"

using namespace pbtest;

// Randomized structural properties over generated reducible graphs. The
// acceptance suite runs the larger populations; these keep the fast
// feedback loop honest.

TEST_CASE("generated graphs pass purify cleanly") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Cfg g = random_reducible_cfg({seed, 40, 80});
        PurifyResult r = purify(g);
        CHECK(r.report.flaws.empty());
    }
}

TEST_CASE("dimension law on generated graphs") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        Cfg g = random_reducible_cfg({seed, 60, 120});
        ClosedCfg closed = close_graph(g);
        int c = cyclomatic_complexity(closed);
        PathSet p = compute_paths(g);
        REQUIRE(p.paths.size() == static_cast<std::size_t>(c));
        BitMatrix m;
        m.width = closed.graph.edge_count();
        for (const Path& path : p.paths) {
            REQUIRE(is_valid_walk(g, path.edges, g.begin(), g.end()));
            m.rows.push_back(path_to_vector(path, closed));
        }
        REQUIRE(rank_gf2(m) == c);
    }
}

TEST_CASE("full pipeline invariants on generated graphs") {
    for (std::uint64_t seed = 200; seed <= 260; ++seed) {
        Cfg g = random_reducible_cfg({seed, 50, 100});
        TestPlan plan = test_pipeline(g);
        REQUIRE_FALSE(plan.aborted);
        CHECK(plan.certificate.is_basis);
        CHECK(plan.certificate.missing_edges.empty());
        CHECK(plan.certificate.accounting.residual == 0);
    }
}

TEST_CASE("span equivalence with the brute-force oracle") {
    for (std::uint64_t seed = 300; seed <= 330; ++seed) {
        Cfg g = random_reducible_cfg({seed, 25, 50});
        ClosedCfg closed = close_graph(g);
        PathSet computed = compute_paths(g);
        PathSet brute = brute_force_basis(closed, 200000);
        BitMatrix a, both;
        a.width = both.width = closed.graph.edge_count();
        for (const Path& path : computed.paths) {
            a.rows.push_back(path_to_vector(path, closed));
            both.rows.push_back(a.rows.back());
        }
        BitMatrix b = a;
        b.rows.clear();
        for (const Path& path : brute.paths) {
            b.rows.push_back(path_to_vector(path, closed));
            both.rows.push_back(b.rows.back());
        }
        CHECK(rank_gf2(a) == rank_gf2(b));
        CHECK(rank_gf2(a) == rank_gf2(both));
    }
}

TEST_CASE("generator respects its caps and is deterministic") {
    for (std::uint64_t seed : {7u, 77u, 777u}) {
        Cfg a = random_reducible_cfg({seed, 30, 60});
        Cfg b = random_reducible_cfg({seed, 30, 60});
        CHECK(a == b);
        CHECK(a.node_count() <= 30);
        CHECK(a.edge_count() <= 60);
    }
}
