#pragma once

// Generators for the graph families the workbench studies:
//   apex_grid(n)        the n x n grid plus a universal vertex
//   pd_grid(n)          n horizontal paths plus n column-dominating vertices
//   build_bn(g, n)      n disjoint copies of the g-subdivision of apex_grid(n)
//   build_bn_prime(g,n) a traceable spanning supergraph of the above, whose
//                       Hamiltonian path fixes a total vertex order
//   build_g(n)          build_bn(1,n) plus n long attachment paths (spacing 2)
//   build_gg(g, n)      build_bn(g,n) plus n attachment paths (spacing g)
//
// Generators return a ConstructionBundle carrying the graph together with the
// metadata downstream consumers need: the vertex order, the chord edges that
// realize the Hamiltonian path, per-copy order ranges, and the attachment
// positions of the long paths.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridrig/graph.hpp"

namespace gridrig {

struct FamilyParams {
    int g = 1;
    int n = 1;
    bool operator==(const FamilyParams&) const = default;
};

struct CopyRange {
    int copy = 0;   // 1-based
    int begin = 0;  // half-open range of order positions
    int end = 0;
    bool operator==(const CopyRange&) const = default;
};

struct ConstructionBundle {
    Graph graph;
    FamilyParams params;
    // order[t] is the vertex at position t (0-based) along the Hamiltonian
    // order of the base family; b_index[i-1] is b_i, the i-th vertex along
    // that order (1-based), so the two sequences coincide.
    std::vector<VertexId> order;
    std::vector<VertexId> b_index;
    std::vector<std::pair<VertexId, VertexId>> extra_edges;
    std::vector<CopyRange> copy_ranges;
    std::map<std::pair<int, int>, VertexId> path_attach;  // (j, i) -> p_{j,i}

    VertexId b(int i) const {  // 1-based
        if (i < 1 || i > (int)order.size())
            throw std::out_of_range("bundle: b_" + std::to_string(i) + " out of range");
        return order[i - 1];
    }
    VertexId attach(int j, int i) const {
        auto it = path_attach.find({j, i});
        if (it == path_attach.end())
            throw std::out_of_range("bundle: no attachment p_{" + std::to_string(j) + "," +
                                    std::to_string(i) + "}");
        return it->second;
    }
    int base_vertex_count() const { return (int)order.size(); }
    // inverse of order: positions()[v] is the 0-based order position of v,
    // -1 for vertices outside the ordered base graph (the path vertices)
    std::vector<int> positions() const {
        std::vector<int> pos(graph.vertex_count(), -1);
        for (int t = 0; t < (int)order.size(); ++t) pos[order[t]] = t;
        return pos;
    }
};

struct BundleCheckResult {
    bool ok = true;
    std::string violation;
};

// ---------------------------------------------------------------------------
// Basic families

inline Graph apex_grid(int n) {
    if (n < 1) throw std::invalid_argument("apex_grid: n must be >= 1");
    Graph g(n * n + 1);
    auto vid = [n](int c, int r) { return (c - 1) * n + (r - 1); };
    for (int c = 1; c <= n; ++c)
        for (int r = 1; r <= n; ++r) {
            VertexLabel lab;
            lab.role = Role::Grid;
            lab.col = c;
            lab.row = r;
            g.set_label(vid(c, r), lab);
        }
    const VertexId apex = n * n;
    {
        VertexLabel lab;
        lab.role = Role::Apex;
        g.set_label(apex, lab);
    }
    for (int c = 1; c <= n; ++c)
        for (int r = 1; r <= n; ++r) {
            if (c < n) g.add_edge(vid(c, r), vid(c + 1, r));
            if (r < n) g.add_edge(vid(c, r), vid(c, r + 1));
            g.add_edge(vid(c, r), apex);
        }
    return g;
}

// n paths of n vertices (a_{1,j} ... a_{n,j}, one per row j), plus vertices
// s_1..s_n where s_i is adjacent to a_{i,j} for every row j.
inline Graph pd_grid(int n) {
    if (n < 1) throw std::invalid_argument("pd_grid: n must be >= 1");
    Graph g(n * n + n);
    auto aid = [n](int i, int j) { return (j - 1) * n + (i - 1); };
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            VertexLabel lab;
            lab.role = Role::Grid;
            lab.col = i;
            lab.row = j;
            g.set_label(aid(i, j), lab);
        }
    for (int i = 1; i <= n; ++i) {
        VertexLabel lab;
        lab.role = Role::Apex;
        g.set_label(n * n + (i - 1), lab);
    }
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < n; ++i) g.add_edge(aid(i, j), aid(i + 1, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) g.add_edge(n * n + (i - 1), aid(i, j));
    return g;
}

// n disjoint copies of the g-subdivision of apex_grid(n). Subdivision
// vertices on former grid-apex edges are relabelled ApexSubdivision with the
// grid endpoint's coordinates.
inline Graph build_bn(int g, int n) {
    if (g < 1 || n < 1) throw std::invalid_argument("build_bn: g and n must be >= 1");
    Graph a = subdivide(apex_grid(n), g);
    const VertexId apex = n * n;
    for (VertexId v = n * n + 1; v < a.vertex_count(); ++v) {
        const VertexLabel& lab = a.label(v);
        if (lab.role == Role::EdgeSubdivision && lab.end_b == apex) {
            const VertexLabel& grid = a.label(lab.end_a);
            VertexLabel nl;
            nl.role = Role::ApexSubdivision;
            nl.col = grid.col;
            nl.row = grid.row;
            nl.index = lab.index;
            a.set_label(v, nl);
        }
    }
    return disjoint_copies(a, n);
}

// ---------------------------------------------------------------------------
// The ordered supergraph

namespace detail {

// Weaves one copy of apex_grid(n)^(g) into a Hamiltonian order, using local
// vertex ids of that copy. Columns are walked in snake order (odd columns
// upward, even columns downward); at each grid vertex the walk threads the
// pendant apex-run and the subdivision runs of the outgoing grid edges,
// hopping between run ends with chord edges. The walk starts at grid (1,1)
// and ends at the apex. Returns the vertex sequence and the chords.
inline void weave_copy(int g, int n, std::vector<VertexId>& seq,
                       std::vector<std::pair<VertexId, VertexId>>& chords) {
    const Graph base = apex_grid(n);
    const VertexId apex = n * n;
    auto vid = [n](int c, int r) { return (c - 1) * n + (r - 1); };

    std::map<std::pair<VertexId, VertexId>, int> edge_rank;
    {
        int t = 0;
        for (auto e : base.edges()) edge_rank[e] = t++;
    }
    const int run_base = n * n + 1;
    // subdivision vertices of edge {x,y}, ordered starting at x's end
    auto run_from = [&](VertexId x, VertexId y) {
        VertexId a = std::min(x, y), b = std::max(x, y);
        int t = edge_rank.at({a, b});
        std::vector<VertexId> run(g);
        for (int i = 0; i < g; ++i) run[i] = run_base + t * g + i;
        if (x != a) std::reverse(run.begin(), run.end());
        return run;
    };
    auto emit = [&seq](const std::vector<VertexId>& run) {
        seq.insert(seq.end(), run.begin(), run.end());
    };

    seq.clear();
    chords.clear();
    if (n == 1) {
        seq.push_back(vid(1, 1));
        emit(run_from(vid(1, 1), apex));
        seq.push_back(apex);
        return;
    }
    for (int c = 1; c <= n; ++c) {
        const bool up = (c % 2 == 1);
        const int last_r = up ? n : 1;
        for (int step = 0; step < n; ++step) {
            const int r = up ? 1 + step : n - step;
            seq.push_back(vid(c, r));
            auto arun = run_from(vid(c, r), apex);
            emit(arun);
            if (c == n && r == last_r) {
                seq.push_back(apex);
            } else if (c == n) {
                auto hrun = run_from(vid(c, r), vid(c, up ? r + 1 : r - 1));
                chords.emplace_back(arun.back(), hrun.front());
                emit(hrun);
            } else if (r == last_r) {
                auto wrun = run_from(vid(c, r), vid(c + 1, r));
                chords.emplace_back(arun.back(), wrun.front());
                emit(wrun);
            } else {
                auto wrun = run_from(vid(c, r), vid(c + 1, r));
                chords.emplace_back(arun.back(), wrun.front());
                emit(wrun);
                auto hrun = run_from(vid(c, r), vid(c, up ? r + 1 : r - 1));
                chords.emplace_back(wrun.back(), hrun.front());
                emit(hrun);
            }
        }
    }
}

} // namespace detail

BundleCheckResult check_order_contract(const ConstructionBundle& b);

// Spanning supergraph of build_bn(g,n) with a Hamiltonian path. The bundle
// order realizes the path; extra_edges lists the added chords and the one
// connector per consecutive copy pair, which joins the previous copy's apex
// to the next copy's starting grid vertex (1,1).
inline ConstructionBundle build_bn_prime(int g, int n) {
    if (g < 1 || n < 1) throw std::invalid_argument("build_bn_prime: g and n must be >= 1");
    std::vector<VertexId> seq;
    std::vector<std::pair<VertexId, VertexId>> chords;
    detail::weave_copy(g, n, seq, chords);

    const int per_copy = (int)seq.size();
    ConstructionBundle bundle;
    bundle.params = {g, n};
    for (int copy = 0; copy < n; ++copy) {
        for (VertexId v : seq) bundle.order.push_back(copy * per_copy + v);
        bundle.copy_ranges.push_back({copy + 1, copy * per_copy, (copy + 1) * per_copy});
        for (auto [u, v] : chords)
            bundle.extra_edges.emplace_back(copy * per_copy + u, copy * per_copy + v);
    }
    const VertexId apex = n * n;
    const VertexId start = 0;  // grid (1,1)
    for (int copy = 0; copy + 1 < n; ++copy)
        bundle.extra_edges.emplace_back(copy * per_copy + apex, (copy + 1) * per_copy + start);
    bundle.b_index = bundle.order;

    bundle.graph = build_bn(g, n);
    if (bundle.graph.vertex_count() != per_copy * n)
        throw std::logic_error("build_bn_prime: weave does not cover one copy");
    for (auto [u, v] : bundle.extra_edges)
        if (!bundle.graph.add_edge(u, v))
            throw std::logic_error("build_bn_prime: chord duplicates a base edge");

    auto check = check_order_contract(bundle);
    if (!check.ok)
        throw std::logic_error("build_bn_prime: self-check failed: " + check.violation);
    return bundle;
}

// Validates the order contract of a build_bn_prime bundle:
//   H1  the graph is a spanning supergraph of build_bn(params), and its edge
//       set is exactly the base edges plus extra_edges;
//   H2  order is a Hamiltonian path of the graph;
//   H3  each copy occupies one contiguous stretch of order;
//   H4  the only extra edges between copies are single connectors joining
//       consecutive copies, each ending at the earlier copy's apex.
inline BundleCheckResult check_order_contract(const ConstructionBundle& b) {
    const Graph base = build_bn(b.params.g, b.params.n);
    const int nverts = base.vertex_count();
    if (b.graph.vertex_count() != nverts)
        return {false, "H1: vertex count differs from the base family"};
    for (auto [u, v] : base.edges())
        if (!b.graph.has_edge(u, v))
            return {false, "H1: base edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") missing"};
    for (auto [u, v] : b.extra_edges) {
        if (base.has_edge(u, v))
            return {false, "H1: extra edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") duplicates a base edge"};
        if (!b.graph.has_edge(u, v))
            return {false, "H1: extra edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") not in the graph"};
    }
    if (b.graph.edge_count() != base.edge_count() + (int)b.extra_edges.size())
        return {false, "H1: edge set is not base edges plus extra edges"};

    if ((int)b.order.size() != nverts) return {false, "H2: order has wrong length"};
    std::vector<char> seen(nverts, 0);
    for (VertexId v : b.order) {
        if (v < 0 || v >= nverts || seen[v]) return {false, "H2: order is not a permutation"};
        seen[v] = 1;
    }
    for (size_t t = 0; t + 1 < b.order.size(); ++t)
        if (!b.graph.has_edge(b.order[t], b.order[t + 1]))
            return {false, "H2: order positions " + std::to_string(t) + "," +
                               std::to_string(t + 1) + " not adjacent"};
    if (b.b_index != b.order) return {false, "H2: b_index disagrees with order"};

    if ((int)b.copy_ranges.size() != b.params.n) return {false, "H3: wrong number of copy ranges"};
    int cursor = 0;
    for (int c = 0; c < b.params.n; ++c) {
        const CopyRange& cr = b.copy_ranges[c];
        if (cr.copy != c + 1 || cr.begin != cursor || cr.end <= cr.begin)
            return {false, "H3: copy ranges not contiguous in copy order"};
        for (int t = cr.begin; t < cr.end; ++t)
            if (b.graph.label(b.order[t]).copy != cr.copy)
                return {false, "H3: order position " + std::to_string(t) +
                                   " lies outside copy " + std::to_string(cr.copy)};
        cursor = cr.end;
    }
    if (cursor != nverts) return {false, "H3: copy ranges do not cover the order"};

    int connectors = 0;
    std::vector<char> pair_seen(b.params.n, 0);
    for (auto [u, v] : b.extra_edges) {
        int cu = b.graph.label(u).copy, cv = b.graph.label(v).copy;
        if (cu == cv) continue;
        VertexId lo = cu < cv ? u : v;
        int clo = std::min(cu, cv), chi = std::max(cu, cv);
        if (chi != clo + 1)
            return {false, "H4: extra edge joins non-consecutive copies " + std::to_string(clo) +
                               "," + std::to_string(chi)};
        if (b.graph.label(lo).role != Role::Apex)
            return {false, "H4: connector from copy " + std::to_string(clo) +
                               " does not end at its apex"};
        if (pair_seen[clo]) return {false, "H4: two connectors between copies " +
                                               std::to_string(clo) + "," + std::to_string(chi)};
        pair_seen[clo] = 1;
        ++connectors;
    }
    if (connectors != b.params.n - 1)
        return {false, "H4: expected " + std::to_string(b.params.n - 1) + " connectors, found " +
                           std::to_string(connectors)};
    return {true, ""};
}

// ---------------------------------------------------------------------------
// The path-attached families

namespace detail {

// Adds n paths of spacing*|V| vertices each and joins the (spacing*i - 1)-st
// vertex of path j to b_i. Fills path_attach.
inline void attach_paths(ConstructionBundle& out, int spacing) {
    const int base = out.graph.vertex_count();
    const int len = spacing * base;
    const int n = out.params.n;
    for (int j = 1; j <= n; ++j) {
        VertexId prev = -1;
        for (int pos = 1; pos <= len; ++pos) {
            VertexLabel lab;
            lab.role = Role::Path;
            lab.path = j;
            lab.pos = pos;
            VertexId w = out.graph.add_vertex(lab);
            if (prev >= 0) out.graph.add_edge(prev, w);
            prev = w;
        }
    }
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= base; ++i) {
            VertexId p = base + (j - 1) * len + (spacing * i - 1) - 1;
            out.graph.add_edge(p, out.order[i - 1]);
            out.path_attach[{j, i}] = p;
        }
}

} // namespace detail

// build_bn(1,n) plus n paths of 2|V| vertices; the (2i-1)-st vertex of each
// path is joined to b_i, the i-th vertex in the build_bn_prime(1,n) order.
// The bundle's graph carries no chord edges; order and b_index still record
// the Hamiltonian order they were taken from.
inline ConstructionBundle build_g(int n) {
    ConstructionBundle bp = build_bn_prime(1, n);
    ConstructionBundle out;
    out.params = bp.params;
    out.order = bp.order;
    out.b_index = bp.b_index;
    out.copy_ranges = bp.copy_ranges;
    out.graph = build_bn(1, n);
    detail::attach_paths(out, 2);
    return out;
}

// build_bn(g,n) plus n paths of g|V| vertices attached at positions gi-1.
// Spacing 1 would put consecutive attachments on adjacent path vertices,
// hence the g >= 2 requirement; the spacing-2 analogue over the
// 1-subdivision is build_g.
inline ConstructionBundle build_gg(int g, int n) {
    if (g < 2) throw std::invalid_argument("build_gg: g must be >= 2");
    ConstructionBundle bp = build_bn_prime(g, n);
    ConstructionBundle out;
    out.params = bp.params;
    out.order = bp.order;
    out.b_index = bp.b_index;
    out.copy_ranges = bp.copy_ranges;
    out.graph = build_bn(g, n);
    detail::attach_paths(out, g);
    return out;
}

} // namespace gridrig
