#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "gridrig/constructions.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/isomorphism.hpp"
#include "gridrig/lifting.hpp"

using namespace gridrig;

namespace {

// path vertex ids in build_g(2): base 0..25, then two paths of 52 vertices
VertexId pv(int j, int pos) { return 26 + (j - 1) * 52 + (pos - 1); }

SubdividedCliqueModel model3(std::vector<std::vector<VertexId>> parts) {
    SubdividedCliqueModel m;
    m.s = 3;
    m.model.kind = ModelKind::Induced;
    m.model.assignment = std::move(parts);
    return m;
}

// X1, X2, X3 strung along the first attachment path, X3 reaching through the
// ordered graph; every connector is a plain path vertex, so all claims hold
SubdividedCliqueModel clean_fixture() {
    return model3({{pv(1, 9), pv(1, 10), pv(1, 11)},
                   {pv(1, 13), pv(1, 14), pv(1, 15)},
                   {0, 4, 5, 7, 12, pv(1, 7), pv(1, 17)},
                   {pv(1, 12)},
                   {pv(1, 8)},
                   {pv(1, 16)}});
}

} // namespace

TEST_CASE("subdivided clique pattern and connector numbering", "[lifting]") {
    REQUIRE(are_isomorphic(subdivided_clique(3), cycle_graph(6)));
    REQUIRE(subdivided_clique(2).vertex_count() == 3);
    REQUIRE(subdivided_clique(4).vertex_count() == 10);
    REQUIRE_THROWS_AS(subdivided_clique(1), std::invalid_argument);

    REQUIRE(sub_vertex(3, 1, 2) == 3);
    REQUIRE(sub_vertex(3, 1, 3) == 4);
    REQUIRE(sub_vertex(3, 2, 3) == 5);
    REQUIRE(sub_vertex(3, 2, 1) == 3);
    std::vector<int> got;
    for (int k = 1; k <= 4; ++k)
        for (int kp = k + 1; kp <= 4; ++kp) got.push_back(sub_vertex(4, k, kp));
    REQUIRE(got == std::vector<int>{4, 5, 6, 7, 8, 9});
    REQUIRE_THROWS_AS(sub_vertex(3, 0, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(sub_vertex(3, 2, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(sub_vertex(3, 1, 4), std::invalid_argument);
}

TEST_CASE("attachment anchors of the first family member", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    REQUIRE(gb.graph.vertex_count() == 130);
    REQUIRE(gb.attach(1, 5) == pv(1, 9));
    REQUIRE(gb.attach(2, 8) == pv(2, 15));
    const VertexLabel& lab = gb.graph.label(pv(1, 10));
    REQUIRE(lab.role == Role::Path);
    REQUIRE(lab.path == 1);
    REQUIRE(lab.pos == 10);
}

TEST_CASE("interval extraction from branching sets", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    SubdividedCliqueModel m = clean_fixture();
    REQUIRE(intervals_of(m, gb, 1) == std::vector<Interval>{{1, 1, 5, 6}});
    REQUIRE(intervals_of(m, gb, 2) == std::vector<Interval>{{2, 1, 7, 8}});
    REQUIRE(intervals_of(m, gb, 3) == std::vector<Interval>{{3, 1, 4, 4}, {3, 1, 9, 9}});
    REQUIRE_THROWS_AS(intervals_of(m, gb, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(intervals_of(m, gb, 4), std::invalid_argument);

    // a branching set split across both paths yields one interval per run
    SubdividedCliqueModel spread = model3({{pv(1, 11), pv(1, 12), pv(1, 13)},
                                           {pv(1, 9), 1, pv(2, 9), pv(2, 10), pv(2, 11), pv(2, 12),
                                            pv(2, 13), pv(2, 14), pv(2, 15)},
                                           {pv(1, 15)},
                                           {pv(1, 10)},
                                           {pv(1, 14)},
                                           {3}});
    REQUIRE(intervals_of(spread, gb, 2) == std::vector<Interval>{{2, 1, 5, 5}, {2, 2, 5, 8}});

    // sets that touch no attachment vertex have no intervals at all
    SubdividedCliqueModel tiny;
    tiny.s = 2;
    tiny.model.kind = ModelKind::Induced;
    tiny.model.assignment = {{pv(1, 2)}, {0}, {pv(1, 1)}};
    REQUIRE(intervals_of(tiny, gb, 1).empty());
    REQUIRE(intervals_of(tiny, gb, 2).empty());
}

TEST_CASE("claims hold on the clean fixture", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    ClaimReport rep = check_claims(clean_fixture(), gb);
    REQUIRE(rep.all_hold());
    REQUIRE(rep.nested_interval.holds);
    REQUIRE(rep.two_cover.holds);
    REQUIRE(rep.triple.holds);
    REQUIRE(rep.nested_interval.witness.empty());
}

TEST_CASE("each claim is violated by the tangled fixture", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    SubdividedCliqueModel m = model3({{pv(1, 11), pv(1, 12), pv(1, 13)},
                                      {pv(1, 9), 1, pv(2, 9), pv(2, 10), pv(2, 11), pv(2, 12),
                                       pv(2, 13), pv(2, 14), pv(2, 15)},
                                      {pv(1, 15)},
                                      {pv(1, 10)},
                                      {pv(1, 14)},
                                      {3}});
    ClaimReport rep = check_claims(m, gb);
    REQUIRE_FALSE(rep.all_hold());
    REQUIRE(rep.nested_interval.witness ==
            "interval {6..7} of X1 on P1 lies inside {5..8} of X2 on P2");
    REQUIRE(rep.two_cover.witness ==
            "interval {6..7} of X1 on P1 lies inside {5..8} of X2 on P2 union {8} of X3 on P1");
    REQUIRE(rep.triple.witness ==
            "X3 meets index 8 between overlapping {5..8} of X2 on P2 and {6..7} of X1 on P1");
}

TEST_CASE("overlaps may hold at most one ordered vertex", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    // X1 and X2 overlap on indices 6..7 and their connector occupies both
    // b_6 and b_7 inside the ordered graph
    SubdividedCliqueModel m = model3({{pv(1, 9), pv(1, 10), pv(1, 11), pv(1, 12), pv(1, 13)},
                                      {pv(2, 11), pv(2, 12), pv(2, 13), pv(2, 14), pv(2, 15)},
                                      {pv(2, 17)},
                                      {1, 8, 9},
                                      {pv(1, 14), pv(1, 15), pv(1, 16), pv(1, 17), 12},
                                      {pv(2, 16)}});
    ClaimReport rep = check_claims(m, gb);
    REQUIRE_FALSE(rep.nested_interval.holds);
    REQUIRE(rep.nested_interval.witness ==
            "overlap of {5..7} of X1 on P1 and {6..8} of X2 on P2 has 2 ordered vertices in "
            "branch sets");
}

TEST_CASE("a connector on an attachment vertex extends a two-interval cover", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    // X1 spans indices 5..9 on the second path; X2 and X3 cover 5..6 and 8..9
    // on the first, and their connector sits on the attachment vertex of 7
    SubdividedCliqueModel m = model3(
        {{pv(2, 9), pv(2, 10), pv(2, 11), pv(2, 12), pv(2, 13), pv(2, 14), pv(2, 15), pv(2, 16),
          pv(2, 17)},
         {pv(1, 9), pv(1, 10), pv(1, 11), pv(1, 12)},
         {pv(1, 14), pv(1, 15), pv(1, 16), pv(1, 17)},
         {1},
         {3},
         {pv(1, 13)}});
    ClaimReport rep = check_claims(m, gb);
    REQUIRE_FALSE(rep.two_cover.holds);
    REQUIRE(rep.two_cover.witness ==
            "interval {5..9} of X1 on P2 lies inside {5..6} of X2 on P1 union {8..9} of X3 on P1 "
            "union {7}");
}

TEST_CASE("normalization shrinks, slides and prunes", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    // like the clean fixture but with a stretched connector leaning on the
    // attachment vertex of index 7
    SubdividedCliqueModel m = model3({{pv(1, 9), pv(1, 10), pv(1, 11)},
                                      {pv(1, 14), pv(1, 15)},
                                      {0, 4, 5, 7, 12, pv(1, 7), pv(1, 17)},
                                      {pv(1, 12), pv(1, 13)},
                                      {pv(1, 8)},
                                      {pv(1, 16)}});
    NormalizeOutcome out = normalize_model(m, gb);
    REQUIRE(out.ok);
    REQUIRE(out.obstruction.empty());
    const auto& a = out.model.model.assignment;
    REQUIRE(a[0] == std::vector<VertexId>{pv(1, 9), pv(1, 10), pv(1, 11), pv(1, 12), pv(1, 13)});
    REQUIRE(a[1] == std::vector<VertexId>{pv(1, 15)});
    REQUIRE(a[2] == std::vector<VertexId>{0, 4, 5, 7, 12, pv(1, 7), pv(1, 17)});
    REQUIRE(a[3] == std::vector<VertexId>{pv(1, 14)});
    REQUIRE(a[4] == std::vector<VertexId>{pv(1, 8)});
    REQUIRE(a[5] == std::vector<VertexId>{pv(1, 16)});
    REQUIRE(check_claims(out.model, gb).all_hold());

    // running it again changes nothing
    NormalizeOutcome again = normalize_model(out.model, gb);
    REQUIRE(again.ok);
    REQUIRE(again.model.model.assignment == a);
}

TEST_CASE("normalization removes a pendant vertex", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    SubdividedCliqueModel m = clean_fixture();
    m.model.assignment[2].push_back(11);  // pendant off the apex
    NormalizeOutcome out = normalize_model(m, gb);
    REQUIRE(out.ok);
    REQUIRE(out.model.model.assignment[2] ==
            std::vector<VertexId>{0, 4, 5, 7, 12, pv(1, 7), pv(1, 17)});
    REQUIRE(out.model.model.assignment == normalize_model(clean_fixture(), gb).model.model.assignment);
}

TEST_CASE("lifting the clean fixture into the ordered supergraph", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    LiftResult lift = lift_to_bprime(clean_fixture(), gb);
    REQUIRE(lift.core_sets ==
            std::vector<std::vector<VertexId>>{{1, 9}, {3, 8}, {0, 4, 5, 7, 12}});
    REQUIRE(lift.branch_sets == lift.core_sets);  // no connector lives in the base
    REQUIRE(lift.pairwise_disjoint);
    REQUIRE(lift.all_connected);
    REQUIRE(lift.pairwise_adjacent);
    REQUIRE(lift.verdict.ok);
}

TEST_CASE("lifting after normalization of the stretched fixture", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    SubdividedCliqueModel m = model3({{pv(1, 9), pv(1, 10), pv(1, 11)},
                                      {pv(1, 14), pv(1, 15)},
                                      {0, 4, 5, 7, 12, pv(1, 7), pv(1, 17)},
                                      {pv(1, 12), pv(1, 13)},
                                      {pv(1, 8)},
                                      {pv(1, 16)}});
    NormalizeOutcome norm = normalize_model(m, gb);
    REQUIRE(norm.ok);
    LiftResult lift = lift_to_bprime(norm.model, gb);
    REQUIRE(lift.core_sets ==
            std::vector<std::vector<VertexId>>{{1, 8, 9}, {3}, {0, 4, 5, 7, 12}});
    REQUIRE(lift.verdict.ok);
}

TEST_CASE("a connector inside the ordered graph joins the smaller side", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    SubdividedCliqueModel m;
    m.s = 2;
    m.model.kind = ModelKind::Induced;
    m.model.assignment = {{0}, {4}, {7}};
    LiftResult lift = lift_to_bprime(m, gb);
    REQUIRE(lift.core_sets == std::vector<std::vector<VertexId>>{{0}, {4}});
    REQUIRE(lift.branch_sets == std::vector<std::vector<VertexId>>{{0, 7}, {4}});
    REQUIRE(lift.verdict.ok);
}

TEST_CASE("a model that claims nothing lifts to an empty branch set", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    SubdividedCliqueModel m;
    m.s = 2;
    m.model.kind = ModelKind::Induced;
    m.model.assignment = {{pv(1, 2)}, {0}, {pv(1, 1)}};
    LiftResult lift = lift_to_bprime(m, gb);
    REQUIRE(lift.core_sets[0].empty());
    REQUIRE_FALSE(lift.all_connected);
    REQUIRE_FALSE(lift.verdict.ok);
}

TEST_CASE("lifting rejects malformed inputs", "[lifting]") {
    ConstructionBundle gb = build_g(2);
    SubdividedCliqueModel m = clean_fixture();

    SubdividedCliqueModel bad = m;
    bad.model.kind = ModelKind::Ordinary;
    REQUIRE_THROWS_AS(check_claims(bad, gb), std::invalid_argument);

    bad = m;
    bad.model.assignment.pop_back();
    REQUIRE_THROWS_AS(check_claims(bad, gb), std::invalid_argument);

    bad = m;
    bad.s = 1;
    REQUIRE_THROWS_AS(check_claims(bad, gb), std::invalid_argument);

    bad = m;
    bad.model.assignment[0].push_back(pv(1, 15));  // collides with X2
    REQUIRE_THROWS_AS(normalize_model(bad, gb), std::invalid_argument);

    // a bundle without attachment paths is not liftable
    REQUIRE_THROWS_AS(check_claims(m, build_bn_prime(1, 2)), std::invalid_argument);
    // the model does not fit the next family member
    REQUIRE_THROWS_AS(check_claims(m, build_g(3)), std::invalid_argument);
}
