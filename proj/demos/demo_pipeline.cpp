// Walks one induced model of the once-subdivided triangle through interval
// extraction, normalization, the interval claims, and the lift into the
// ordered supergraph, then extracts a triangle minor from a region
// intersection representation.

#include <cstdio>

#include "gridrig/constructions.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/lifting.hpp"
#include "gridrig/minor_search.hpp"
#include "gridrig/rig.hpp"

using namespace gridrig;

int main() {
    ConstructionBundle gb = build_g(2);
    std::printf("host: %d vertices, %d edges\n", gb.graph.vertex_count(),
                gb.graph.edge_count());

    // an induced model of the subdivided triangle along the first
    // attachment path; positions 9..17 of P1 start at vertex 34
    auto pv = [&](int j, int pos) { return 26 + (j - 1) * 52 + (pos - 1); };
    SubdividedCliqueModel m;
    m.s = 3;
    m.model.kind = ModelKind::Induced;
    m.model.assignment = {{pv(1, 9), pv(1, 10), pv(1, 11)},
                          {pv(1, 13), pv(1, 14), pv(1, 15)},
                          {0, 4, 5, 7, 12, pv(1, 7), pv(1, 17)},
                          {pv(1, 12)},
                          {pv(1, 8)},
                          {pv(1, 16)}};
    VerifyResult check = verify_model(subdivided_clique(m.s), gb.graph, m.model);
    std::printf("model: %s\n", check.ok ? "valid" : check.violation.c_str());

    for (int k = 1; k <= m.s; ++k) {
        std::printf("X%d intervals:", k);
        for (const Interval& iv : intervals_of(m, gb, k))
            std::printf(" P%d[%d..%d]", iv.path_j, iv.lo, iv.hi);
        std::printf("\n");
    }

    NormalizeOutcome norm = normalize_model(m, gb);
    std::printf("normalize: %s\n", norm.ok ? "ok" : norm.obstruction.c_str());

    ClaimReport claims = check_claims(norm.model, gb);
    std::printf("claims: nested=%d two-cover=%d triple=%d\n",
                claims.nested_interval.holds, claims.two_cover.holds, claims.triple.holds);

    LiftResult lift = lift_to_bprime(norm.model, gb);
    std::printf("lift: ");
    for (size_t k = 0; k < lift.branch_sets.size(); ++k)
        std::printf("|Y%zu|=%zu ", k + 1, lift.branch_sets[k].size());
    std::printf("-> %s\n", lift.verdict.ok ? "clique model verified" : lift.verdict.violation.c_str());

    // region representation detour: realize a hexagon from its canonical
    // subdivision representation, locate it, and pull back a triangle
    RIGRepresentation rep = canonical_subdivision_rep(cycle_graph(6));
    Graph realized = realize(rep);
    SearchOutcome so = find_model(subdivide(complete_graph(3), 1), realized, ModelKind::Induced);
    if (so.outcome == Outcome::Found) {
        MinorModel tri = extract_minor_from_rig(complete_graph(3), rep, *so.model);
        VerifyResult vr = verify_model(complete_graph(3), rep.host, tri);
        std::printf("triangle minor in the hexagon host: %s\n",
                    vr.ok ? "verified" : vr.violation.c_str());
    }
    return 0;
}
