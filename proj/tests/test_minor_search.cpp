#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gridrig/claim_suite.hpp"
#include "gridrig/constructions.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/minor_search.hpp"

using namespace gridrig;

namespace {

MinorModel make_model(ModelKind kind, std::vector<std::vector<VertexId>> sets) {
    MinorModel m;
    m.kind = kind;
    m.assignment = std::move(sets);
    return m;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

} // namespace

TEST_CASE("model verification reports each violation kind", "[search]") {
    Graph host = cycle_graph(6);
    Graph triangle = complete_graph(3);

    VerifyResult r = verify_model(triangle, host,
                                  make_model(ModelKind::Ordinary, {{0, 1}, {2, 3}}));
    REQUIRE(r.violation == "domain: expected 3 branch sets, got 2");

    r = verify_model(triangle, host,
                     make_model(ModelKind::Ordinary, {{0, 1}, {}, {2}}));
    REQUIRE(r.violation == "domain: branch set 1 is empty");

    r = verify_model(triangle, host,
                     make_model(ModelKind::Ordinary, {{0}, {9}, {2}}));
    REQUIRE(r.violation == "domain: branch set 1 contains invalid vertex 9");

    r = verify_model(triangle, host,
                     make_model(ModelKind::Ordinary, {{0}, {1, 1}, {2}}));
    REQUIRE(r.violation == "domain: branch set 1 lists vertex 1 twice");

    r = verify_model(triangle, host,
                     make_model(ModelKind::Ordinary, {{0, 1}, {1, 2}, {3}}));
    REQUIRE(r.violation == "disjointness: branch sets 0 and 1 share vertex 1");

    r = verify_model(triangle, host,
                     make_model(ModelKind::Ordinary, {{0, 2}, {1}, {3}}));
    REQUIRE(r.violation == "connectivity: branch set 0 is not connected");

    r = verify_model(triangle, host,
                     make_model(ModelKind::Ordinary, {{0}, {1}, {3}}));
    REQUIRE(r.violation == "adjacency: pattern edge (0,2) has non-adjacent branch sets");

    Graph co_pair(2);  // two vertices, no edge
    r = verify_model(co_pair, host, make_model(ModelKind::Induced, {{0}, {1}}));
    REQUIRE(r.violation == "non-edge adjacency: pattern non-edge (0,1) has adjacent branch sets");
    r = verify_model(co_pair, host, make_model(ModelKind::Ordinary, {{0}, {1}}));
    REQUIRE(r.ok);  // ordinary models ignore non-edges

    r = verify_model(triangle, cycle_graph(6),
                     make_model(ModelKind::Ordinary, {{0, 1}, {2, 3}, {4, 5}}));
    REQUIRE(r.ok);
}

TEST_CASE("known searches", "[search]") {
    REQUIRE(find_model(cycle_graph(4), complete_graph(4), ModelKind::Ordinary).outcome ==
            Outcome::Found);
    REQUIRE(find_model(cycle_graph(4), complete_graph(4), ModelKind::Induced).outcome ==
            Outcome::Absent);
    REQUIRE(find_model(complete_graph(3), cycle_graph(6), ModelKind::Induced).outcome ==
            Outcome::Found);
    REQUIRE(find_model(complete_graph(4), cycle_graph(6), ModelKind::Ordinary).outcome ==
            Outcome::Absent);
    REQUIRE(find_model(path_graph(3), complete_graph(3), ModelKind::Induced).outcome ==
            Outcome::Absent);
    REQUIRE(find_model(complete_graph(5), petersen(), ModelKind::Ordinary).outcome ==
            Outcome::Found);
    REQUIRE(find_model(complete_graph(6), petersen(), ModelKind::Ordinary).outcome ==
            Outcome::Absent);
    REQUIRE(find_model(complete_graph(5), grid_graph(4, 4), ModelKind::Ordinary).outcome ==
            Outcome::Absent);
}

TEST_CASE("found witnesses always verify", "[search]") {
    std::mt19937 rng(4242);
    auto corpus = gridrig::detail::connected_graph_corpus(6);
    std::vector<Graph> patterns{complete_graph(3), cycle_graph(4), path_graph(4),
                                cycle_graph(5)};
    int found = 0;
    for (int round = 0; round < 400; ++round) {
        const Graph& host = corpus[rng() % corpus.size()];
        const Graph& pat = patterns[rng() % patterns.size()];
        ModelKind kind = rng() % 2 ? ModelKind::Induced : ModelKind::Ordinary;
        SearchOutcome so = find_model(pat, host, kind);
        if (so.outcome != Outcome::Found) continue;
        ++found;
        REQUIRE(so.model.has_value());
        REQUIRE(so.model->kind == kind);
        REQUIRE(verify_model(pat, host, *so.model).ok);
    }
    REQUIRE(found > 50);
}

TEST_CASE("enumeration count matches the exhaustive count", "[search]") {
    auto corpus = gridrig::detail::connected_graph_corpus(5);
    std::vector<Graph> patterns{complete_graph(3), path_graph(3), cycle_graph(4)};
    for (const Graph& host : corpus)
        for (const Graph& pat : patterns)
            for (ModelKind kind : {ModelKind::Ordinary, ModelKind::Induced}) {
                EnumerationResult er = enumerate_models(pat, host, kind);
                REQUIRE(er.complete);
                long long expect = gridrig::detail::brute_force_count(pat, host, kind);
                REQUIRE((long long)er.models.size() == expect);
                for (const MinorModel& m : er.models) REQUIRE(verify_model(pat, host, m).ok);
                // enumerated assignments are pairwise distinct
                for (size_t a = 0; a + 1 < er.models.size(); ++a)
                    for (size_t b = a + 1; b < er.models.size(); ++b)
                        REQUIRE(er.models[a].assignment != er.models[b].assignment);
            }
}

TEST_CASE("enumeration respects caps", "[search]") {
    EnumerationResult er =
        enumerate_models(complete_graph(3), complete_graph(6), ModelKind::Ordinary, {}, 5);
    REQUIRE(er.models.size() == 5);
    REQUIRE_FALSE(er.complete);
}

TEST_CASE("budget exhaustion yields unknown, not a guess", "[search]") {
    SearchOptions opt;
    opt.budget = 3;
    SearchOutcome so = find_model(complete_graph(4), grid_graph(5, 5), ModelKind::Ordinary, opt);
    REQUIRE(so.outcome == Outcome::Unknown);
    REQUIRE(so.nodes_used <= 4);

    opt.budget = -1;
    so = find_model(complete_graph(4), grid_graph(5, 5), ModelKind::Ordinary, opt);
    REQUIRE(so.outcome == Outcome::Found);  // K4 is a minor of the 5x5 grid
}

TEST_CASE("parallel search agrees with sequential", "[search]") {
    std::vector<std::pair<Graph, Graph>> cases;
    cases.emplace_back(complete_graph(5), apex_grid(3));
    cases.emplace_back(complete_graph(6), apex_grid(3));
    cases.emplace_back(cycle_graph(6), grid_graph(3, 3));
    cases.emplace_back(complete_graph(4), petersen());
    for (auto& [pat, host] : cases)
        for (ModelKind kind : {ModelKind::Ordinary, ModelKind::Induced}) {
            SearchOptions seq, par;
            par.jobs = 4;
            Outcome a = find_model(pat, host, kind, seq).outcome;
            Outcome b = find_model(pat, host, kind, par).outcome;
            REQUIRE(a == b);
        }
}

TEST_CASE("disconnected patterns and hosts", "[search]") {
    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    REQUIRE(find_model(two_edges, path_graph(5), ModelKind::Induced).outcome == Outcome::Found);
    REQUIRE(find_model(two_edges, path_graph(4), ModelKind::Induced).outcome == Outcome::Absent);
    REQUIRE(find_model(two_edges, path_graph(4), ModelKind::Ordinary).outcome == Outcome::Found);

    Graph two_triangles = disjoint_copies(complete_graph(3), 2);
    REQUIRE(find_model(complete_graph(3), two_triangles, ModelKind::Induced).outcome ==
            Outcome::Found);
    REQUIRE(find_model(complete_graph(4), two_triangles, ModelKind::Ordinary).outcome ==
            Outcome::Absent);
}

TEST_CASE("cut vertices split the search for two-connected patterns", "[search]") {
    // two K5 blocks sharing one vertex; K5 exists, K6 does not
    Graph shared(9);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) shared.add_edge(a, b);
    int block2[5] = {4, 5, 6, 7, 8};
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) shared.add_edge(block2[a], block2[b]);
    REQUIRE(find_model(complete_graph(5), shared, ModelKind::Ordinary).outcome ==
            Outcome::Found);
    SearchOutcome k6 = find_model(complete_graph(6), shared, ModelKind::Ordinary);
    REQUIRE(k6.outcome == Outcome::Absent);
    REQUIRE(k6.nodes_used < 2000);  // block split keeps this tiny
}

TEST_CASE("search argument validation", "[search]") {
    REQUIRE_THROWS_AS(find_model(Graph(0), path_graph(2), ModelKind::Ordinary),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(find_model(path_graph(2), Graph(0), ModelKind::Ordinary),
                      std::invalid_argument);
    SearchOptions opt;
    opt.jobs = 0;
    REQUIRE_THROWS_AS(find_model(path_graph(2), path_graph(3), ModelKind::Ordinary, opt),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(brute_force_contains(path_graph(2), grid_graph(4, 3), ModelKind::Ordinary),
                      std::invalid_argument);  // exhaustive oracle is capped at 10 vertices
}

TEST_CASE("exhaustive oracle spot checks", "[search]") {
    REQUIRE(brute_force_contains(complete_graph(3), cycle_graph(6), ModelKind::Ordinary));
    REQUIRE(brute_force_contains(complete_graph(3), cycle_graph(6), ModelKind::Induced));
    REQUIRE_FALSE(brute_force_contains(complete_graph(4), cycle_graph(8), ModelKind::Ordinary));
    REQUIRE(brute_force_contains(cycle_graph(4), complete_graph(4), ModelKind::Ordinary));
    REQUIRE_FALSE(brute_force_contains(cycle_graph(4), complete_graph(4), ModelKind::Induced));
}
