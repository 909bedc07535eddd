#include <catch2/catch_amalgamated.hpp>

#include "gridrig/constructions.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/isomorphism.hpp"
#include "oracles.hpp"

using namespace gridrig;

TEST_CASE("apex grid shape", "[constructions]") {
    for (int n = 1; n <= 4; ++n) {
        Graph a = apex_grid(n);
        REQUIRE(a.vertex_count() == n * n + 1);
        REQUIRE(a.edge_count() == 2 * n * (n - 1) + n * n);
        for (VertexId v = 0; v < n * n; ++v) {
            REQUIRE(a.label(v).role == Role::Grid);
            REQUIRE(a.has_edge(v, n * n));
        }
        REQUIRE(a.label(n * n).role == Role::Apex);
        REQUIRE((int)a.neighbors(n * n).size() == n * n);
    }
    REQUIRE_THROWS_AS(apex_grid(0), std::invalid_argument);
    REQUIRE(girth(apex_grid(2)).length() == 3);
    REQUIRE(girth(apex_grid(3)) == oracles::girth_by_deletion(apex_grid(3)));
}

TEST_CASE("star-path grid shape", "[constructions]") {
    Graph p = pd_grid(3);
    REQUIRE(p.vertex_count() == 12);
    // three row paths of two edges each, three stars of three leaves each
    REQUIRE(p.edge_count() == 3 * 2 + 3 * 3);
    for (int i = 1; i <= 3; ++i) {
        VertexId s = 9 + (i - 1);
        REQUIRE(p.label(s).role == Role::Apex);
        REQUIRE((int)p.neighbors(s).size() == 3);
    }
    // a(i,j) at (j-1)*3 + (i-1); row j is a path over i, star i collects
    // column i across the rows
    REQUIRE(p.has_edge(0, 1));
    REQUIRE(p.has_edge(1, 2));
    REQUIRE_FALSE(p.has_edge(0, 2));
    REQUIRE(p.has_edge(9, 0));
    REQUIRE(p.has_edge(9, 3));
    REQUIRE(p.has_edge(9, 6));
    REQUIRE(girth(pd_grid(2)) == oracles::girth_by_deletion(pd_grid(2)));
}

TEST_CASE("copied subdivided apex grids", "[constructions]") {
    Graph b = build_bn(1, 2);
    REQUIRE(b.vertex_count() == 26);
    REQUIRE(b.edge_count() == 32);
    REQUIRE(b.component_count() == 2);
    // apex subdivision vertices are relabeled with the grid endpoint's place
    int apex_subs = 0, edge_subs = 0;
    for (VertexId v = 0; v < b.vertex_count(); ++v) {
        if (b.label(v).role == Role::ApexSubdivision) ++apex_subs;
        if (b.label(v).role == Role::EdgeSubdivision) ++edge_subs;
    }
    REQUIRE(apex_subs == 2 * 4);  // one per grid vertex per copy
    REQUIRE(edge_subs == 2 * 4);  // one per grid edge per copy
    for (int g = 1; g <= 3; ++g) {
        Graph bg = build_bn(g, 2);
        int av = 5 + 8 * g;
        REQUIRE(bg.vertex_count() == 2 * av);
        REQUIRE(bg.edge_count() == 2 * 8 * (g + 1));
        REQUIRE(girth(bg).length() == 3 * (g + 1));
    }
    REQUIRE(girth(build_bn(2, 2)) == oracles::girth_by_deletion(build_bn(2, 2)));
}

TEST_CASE("ordered supergraph golden data for the smallest size", "[constructions]") {
    ConstructionBundle bp = build_bn_prime(1, 2);
    REQUIRE(bp.graph.vertex_count() == 26);
    REQUIRE(bp.graph.edge_count() == 41);
    std::vector<VertexId> expected_order{0, 7,  6,  5,  1,  9,  8,  3,  12, 10, 2,  11, 4,
                                         13, 20, 19, 18, 14, 22, 21, 16, 25, 23, 15, 24, 17};
    REQUIRE(bp.order == expected_order);
    REQUIRE(bp.b_index == expected_order);
    std::vector<std::pair<VertexId, VertexId>> expected_extras{
        {7, 6}, {6, 5}, {9, 8}, {12, 10}, {20, 19}, {19, 18}, {22, 21}, {25, 23}, {4, 13}};
    REQUIRE(bp.extra_edges == expected_extras);
    REQUIRE(bp.copy_ranges == std::vector<CopyRange>{{1, 0, 13}, {2, 13, 26}});
    REQUIRE(bp.b(1) == 0);
    REQUIRE(bp.b(13) == 4);
    REQUIRE(bp.b(14) == 13);
    REQUIRE_THROWS_AS(bp.b(0), std::out_of_range);
    REQUIRE_THROWS_AS(bp.b(27), std::out_of_range);
}

TEST_CASE("ordered supergraph structural contract", "[constructions]") {
    for (auto [g, n] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 2}, {2, 3}}) {
        ConstructionBundle bp = build_bn_prime(g, n);
        BundleCheckResult r = check_order_contract(bp);
        INFO("g=" << g << " n=" << n << " " << r.violation);
        REQUIRE(r.ok);
        // the order is a spanning path: consecutive entries adjacent
        for (size_t i = 0; i + 1 < bp.order.size(); ++i)
            REQUIRE(bp.graph.has_edge(bp.order[i], bp.order[i + 1]));
    }
    ConstructionBundle tiny = build_bn_prime(1, 1);
    REQUIRE(are_isomorphic(tiny.graph, path_graph(3)));
    REQUIRE(tiny.extra_edges.empty());
}

TEST_CASE("contract checks flag corrupted bundles", "[constructions]") {
    ConstructionBundle bp = build_bn_prime(1, 2);

    ConstructionBundle bad = bp;
    std::swap(bad.order[1], bad.order[2]);
    std::swap(bad.b_index[1], bad.b_index[2]);
    BundleCheckResult r = check_order_contract(bad);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.violation.substr(0, 3) == "H2:");

    bad = bp;
    bad.extra_edges.pop_back();  // drop the connector
    r = check_order_contract(bad);
    REQUIRE_FALSE(r.ok);

    bad = bp;
    bad.copy_ranges[1].begin = 12;
    r = check_order_contract(bad);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.violation.substr(0, 3) == "H3:");

    bad = bp;
    bad.b_index[0] = bad.b_index[1];
    r = check_order_contract(bad);
    REQUIRE_FALSE(r.ok);
}

TEST_CASE("path attachment structure", "[constructions]") {
    for (int n = 2; n <= 3; ++n) {
        ConstructionBundle gb = build_g(n);
        const int base = gb.base_vertex_count();
        const int plen = 2 * base;
        REQUIRE(gb.graph.vertex_count() == base + n * plen);
        REQUIRE(girth(gb.graph).length() == 5);

        // every ordered vertex holds exactly one attachment per path
        for (int i = 1; i <= base; ++i) {
            VertexId b = gb.b(i);
            int path_neighbors = 0;
            for (VertexId w : gb.graph.neighbors(b))
                if (gb.graph.label(w).role == Role::Path) {
                    ++path_neighbors;
                    REQUIRE(gb.graph.label(w).pos == 2 * i - 1);
                }
            REQUIRE(path_neighbors == n);
        }
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= base; ++i) {
                VertexId p = gb.attach(j, i);
                REQUIRE(gb.graph.label(p).role == Role::Path);
                REQUIRE(gb.graph.label(p).path == j);
                REQUIRE(gb.graph.label(p).pos == 2 * i - 1);
                REQUIRE(gb.graph.has_edge(p, gb.b(i)));
            }

        // removing the base leaves exactly the n paths
        std::vector<VertexId> rest;
        for (VertexId v = base; v < gb.graph.vertex_count(); ++v) rest.push_back(v);
        Graph paths = induced_subgraph(gb.graph, rest);
        REQUIRE(paths.component_count() == n);
        REQUIRE(paths.edge_count() == n * (plen - 1));
        REQUIRE(girth(paths).is_unbounded());

        // no extra edges beyond base, paths, and one attachment per (i, j)
        REQUIRE(gb.graph.edge_count() ==
                build_bn(1, n).edge_count() + n * (plen - 1) + n * base);
        REQUIRE(gb.extra_edges.empty());
    }
}

TEST_CASE("stretched family girth", "[constructions]") {
    REQUIRE_THROWS_AS(build_gg(1, 2), std::invalid_argument);
    for (int g = 2; g <= 3; ++g) {
        ConstructionBundle gg = build_gg(g, 2);
        const int base = gg.base_vertex_count();
        REQUIRE(gg.graph.vertex_count() == base * (1 + 2 * g));
        GirthValue got = girth(gg.graph);
        REQUIRE(got.length() == g + 3);
        REQUIRE(got == oracles::girth_by_deletion(gg.graph));
        for (int i = 1; i <= base; ++i)
            REQUIRE(gg.graph.label(gg.attach(1, i)).pos == g * i - 1);
    }
}

TEST_CASE("bundle positions invert the order", "[constructions]") {
    ConstructionBundle bp = build_bn_prime(2, 2);
    std::vector<int> pos = bp.positions();
    for (int i = 0; i < (int)bp.order.size(); ++i) REQUIRE(pos[bp.order[i]] == i);
    ConstructionBundle gb = build_g(2);
    pos = gb.positions();
    for (VertexId v = gb.base_vertex_count(); v < gb.graph.vertex_count(); ++v)
        REQUIRE(pos[v] == -1);
}
