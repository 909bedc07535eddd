// Prints a size/girth table for each graph family the library constructs.

#include <cstdio>
#include <string>

#include "gridrig/constructions.hpp"
#include "gridrig/graph.hpp"

using namespace gridrig;

namespace {

void row(const std::string& name, const Graph& g) {
    GirthValue gv = girth(g);
    std::string girth_str = gv.is_unbounded() ? "inf" : std::to_string(gv.length());
    std::printf("%-16s %8d %8d %8s\n", name.c_str(), g.vertex_count(), g.edge_count(),
                girth_str.c_str());
}

} // namespace

int main() {
    std::printf("%-16s %8s %8s %8s\n", "graph", "vertices", "edges", "girth");

    for (int n = 1; n <= 4; ++n) row("apex_grid(" + std::to_string(n) + ")", apex_grid(n));
    for (int n = 2; n <= 4; ++n) row("pd_grid(" + std::to_string(n) + ")", pd_grid(n));
    for (int g = 2; g <= 4; ++g)
        row("bn(" + std::to_string(g) + ",2)", build_bn(g, 2));
    row("bn_prime(2,2)", build_bn_prime(2, 2).graph);
    for (int n = 2; n <= 3; ++n)
        row("g(" + std::to_string(n) + ")", build_g(n).graph);
    for (int g = 3; g <= 5; ++g)
        row("gg(" + std::to_string(g) + ",2)", build_gg(g, 2).graph);

    ConstructionBundle b = build_g(2);
    std::printf("\ng(2): %d base vertices, %d attachment paths, b1..b3 = %d %d %d\n",
                b.base_vertex_count(), b.params.n, b.b(1), b.b(2), b.b(3));
    return 0;
}
