#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <vector>

#include "gridrig/claim_suite.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/isomorphism.hpp"
#include "gridrig/tree_decomposition.hpp"

using namespace gridrig;

TEST_CASE("path decomposition of the path", "[td]") {
    Graph g = path_graph(4);
    TreeDecomposition td{path_graph(3), {{0, 1}, {1, 2}, {2, 3}}};
    TdVerifyResult r = verify_td(g, td);
    REQUIRE(r.ok);
    REQUIRE(r.width == 1);
    REQUIRE(r.adhesion == 1);
}

TEST_CASE("square decomposition into two triangles", "[td]") {
    Graph g = cycle_graph(4);
    TreeDecomposition td{path_graph(2), {{0, 1, 3}, {1, 2, 3}}};
    TdVerifyResult r = verify_td(g, td);
    REQUIRE(r.ok);
    REQUIRE(r.width == 2);
    REQUIRE(r.adhesion == 2);

    for (int node : {0, 1}) {
        TorsoResult t = torso(g, td, node);
        REQUIRE(are_isomorphic(t.graph, complete_graph(3)));
        REQUIRE(std::is_sorted(t.vertices.begin(), t.vertices.end()));
    }
    REQUIRE(torso(g, td, 0).vertices == std::vector<VertexId>{0, 1, 3});
}

TEST_CASE("one-bag and empty decompositions", "[td]") {
    TreeDecomposition whole{Graph(1), {{0, 1, 2, 3}}};
    TdVerifyResult r = verify_td(complete_graph(4), whole);
    REQUIRE(r.ok);
    REQUIRE(r.width == 3);
    REQUIRE(r.adhesion == 0);

    REQUIRE(verify_td(Graph(0), TreeDecomposition{}).ok);
    REQUIRE(verify_td(path_graph(2), TreeDecomposition{}).violation ==
            "decomposition tree is empty");
}

TEST_CASE("decomposition verification reports violations", "[td]") {
    Graph g = path_graph(4);
    TreeDecomposition good{path_graph(3), {{0, 1}, {1, 2}, {2, 3}}};

    TreeDecomposition bad = good;
    bad.tree = cycle_graph(3);
    REQUIRE(verify_td(g, bad).violation == "decomposition tree is not a tree");

    bad = good;
    bad.bags.pop_back();
    REQUIRE(verify_td(g, bad).violation == "expected 3 bags, got 2");

    bad = good;
    bad.bags[0] = {0, 9};
    REQUIRE(verify_td(g, bad).violation == "bag 0 contains invalid vertex 9");

    bad = good;
    bad.bags[1] = {1, 2, 2};
    REQUIRE(verify_td(g, bad).violation == "bag 1 lists vertex 2 twice");

    bad = good;
    bad.bags[2] = {2};
    REQUIRE(verify_td(g, bad).violation == "uncovered edge (2,3)");

    Graph with_isolated(4);
    with_isolated.add_edge(0, 1);
    with_isolated.add_edge(1, 2);
    TreeDecomposition missing{path_graph(3), {{0, 1}, {1, 2}, {2}}};
    REQUIRE(verify_td(with_isolated, missing).violation == "vertex 3 appears in no bag");

    TreeDecomposition split_trace{path_graph(3), {{0, 1}, {2}, {1, 2, 3}}};
    REQUIRE(verify_td(g, split_trace).violation == "bag trace of vertex 1 is disconnected");
}

TEST_CASE("torso validates its inputs", "[td]") {
    Graph g = cycle_graph(4);
    TreeDecomposition td{path_graph(2), {{0, 1, 3}, {1, 2, 3}}};
    REQUIRE_THROWS_AS(torso(g, td, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(torso(g, td, -1), std::invalid_argument);
    TreeDecomposition bad = td;
    bad.bags[0] = {0, 1};
    REQUIRE_THROWS_AS(torso(g, bad, 0), std::invalid_argument);
}

TEST_CASE("clique sums of small pieces", "[td]") {
    // two triangles over an edge make a diamond
    Graph diamond = clique_sum(complete_graph(3), {0, 1}, complete_graph(3), {0, 1});
    REQUIRE(diamond.vertex_count() == 4);
    REQUIRE(diamond.edge_count() == 5);
    REQUIRE(diamond.has_edge(2, 3) == false);

    // two edges over a vertex make a path
    REQUIRE(clique_sum(path_graph(2), {1}, path_graph(2), {0}) == path_graph(3));

    // dropping the shared edge of the diamond leaves the square
    Graph square = clique_sum(complete_graph(3), {0, 1}, complete_graph(3), {0, 1}, {{0, 1}});
    REQUIRE(are_isomorphic(square, cycle_graph(4)));

    // a sum over the empty clique is a disjoint union
    Graph two = clique_sum(complete_graph(3), {}, complete_graph(3), {});
    REQUIRE(two.vertex_count() == 6);
    REQUIRE(two.component_count() == 2);
}

TEST_CASE("clique sums preserve labels of both sides", "[td]") {
    Graph g2 = complete_graph(3);
    VertexLabel mark;
    mark.role = Role::Apex;
    g2.set_label(2, mark);
    Graph out = clique_sum(apex_grid(2), {4, 0}, g2, {0, 1});
    REQUIRE(out.vertex_count() == apex_grid(2).vertex_count() + 1);
    REQUIRE(out.label(4).role == Role::Apex);
    REQUIRE(out.label(0) == apex_grid(2).label(0));
    REQUIRE(out.label(5) == mark);
}

TEST_CASE("clique sum validation", "[td]") {
    Graph k3 = complete_graph(3);
    REQUIRE_THROWS_AS(clique_sum(k3, {0, 1}, k3, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(clique_sum(k3, {0, 5}, k3, {0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(clique_sum(k3, {0, 0}, k3, {0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(clique_sum(path_graph(3), {0, 2}, k3, {0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(clique_sum(k3, {0, 1}, k3, {0, 1}, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("common nodes of pairwise intersecting subtrees", "[td]") {
    Graph path = path_graph(5);
    HellyResult r = helly_common_node(path, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    REQUIRE(r.node == 2);
    REQUIRE_FALSE(r.disjoint_pair.has_value());

    r = helly_common_node(path, {{0, 1}, {3, 4}});
    REQUIRE_FALSE(r.node.has_value());
    REQUIRE(r.disjoint_pair == std::make_pair(0, 1));

    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    REQUIRE(helly_common_node(star, {{0, 1}, {0, 2}, {0, 3}}).node == 0);
    r = helly_common_node(star, {{0}, {1}, {0, 2}});
    REQUIRE(r.disjoint_pair == std::make_pair(0, 1));
}

TEST_CASE("common node search validates its inputs", "[td]") {
    REQUIRE_THROWS_AS(helly_common_node(cycle_graph(4), {{0}}), std::invalid_argument);
    Graph path = path_graph(3);
    REQUIRE_THROWS_AS(helly_common_node(path, {{}}), std::invalid_argument);
    REQUIRE_THROWS_AS(helly_common_node(path, {{0, 7}}), std::invalid_argument);
    REQUIRE_THROWS_AS(helly_common_node(path, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("common node agrees with the mask oracle on all small trees", "[td]") {
    for (const Graph& tree : gridrig::detail::tree_corpus(5)) {
        auto subs = gridrig::detail::all_subtrees(tree);
        for (size_t a = 0; a < subs.size(); ++a)
            for (size_t b = a; b < subs.size(); ++b) {
                HellyResult r = helly_common_node(tree, {subs[a], subs[b]});
                unsigned ma = 0, mb = 0;
                for (int x : subs[a]) ma |= 1u << x;
                for (int x : subs[b]) mb |= 1u << x;
                if ((ma & mb) != 0) {
                    REQUIRE(r.node.has_value());
                    REQUIRE(((ma & mb) >> *r.node) % 2 == 1);
                } else {
                    REQUIRE(r.disjoint_pair == std::make_pair(0, 1));
                }
            }
    }
}
