#pragma once

// Region intersection graphs. A representation of a graph Gamma over a host
// graph assigns every Gamma-vertex a non-empty connected host region;
// realize() is the graph with one vertex per region and an edge exactly
// where two regions share a host vertex.
//
// extract_minor_from_rig turns a representation of Gamma plus an induced
// model of a 1-subdivision h^(1) inside Gamma into an ordinary model of h in
// the host: region unions of branch sets of adjacent Gamma-branch sets must
// intersect, so each subdivision branch set's region union contains a path
// joining the two incident branching region unions, and splitting that path
// at its midpoint extends the branching sets until they touch.

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridrig/bitset.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/minor_search.hpp"

namespace gridrig {

struct RIGRepresentation {
    Graph host;
    std::vector<std::vector<VertexId>> regions;
};

struct RigSearchOutcome {
    Outcome outcome = Outcome::Absent;
    std::optional<RIGRepresentation> rep;
    long long nodes_used = 0;
};

namespace detail {

inline Bitset region_mask(const RIGRepresentation& rep, int r) {
    const int H = rep.host.vertex_count();
    Bitset mask(H);
    const auto& reg = rep.regions[r];
    if (reg.empty())
        throw std::invalid_argument("region " + std::to_string(r) + " is empty");
    for (VertexId v : reg) {
        if (v < 0 || v >= H)
            throw std::invalid_argument("region " + std::to_string(r) +
                                        " contains invalid vertex " + std::to_string(v));
        mask.set(v);
    }
    std::vector<VertexId> stack{reg[0]};
    Bitset seen(H);
    seen.set(reg[0]);
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : rep.host.neighbors(v))
            if (mask.test(w) && !seen.test(w)) {
                seen.set(w);
                ++reached;
                stack.push_back(w);
            }
    }
    if (seen != mask)
        throw std::invalid_argument("region " + std::to_string(r) + " is not connected");
    return mask;
}

} // namespace detail

inline Graph realize(const RIGRepresentation& rep) {
    const int k = (int)rep.regions.size();
    std::vector<Bitset> masks;
    masks.reserve(k);
    for (int r = 0; r < k; ++r) masks.push_back(detail::region_mask(rep, r));
    Graph g(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (masks[a].intersects(masks[b])) g.add_edge(a, b);
    return g;
}

// The standard representation of g over its 1-subdivision: each vertex's
// region is the vertex itself plus the subdivision vertex of every incident
// edge. Neighboring regions share exactly that subdivision vertex.
inline RIGRepresentation canonical_subdivision_rep(const Graph& g) {
    RIGRepresentation rep;
    rep.host = subdivide(g, 1);
    rep.regions.assign(g.vertex_count(), {});
    const int n = g.vertex_count();
    auto edges = g.edges();
    for (VertexId v = 0; v < n; ++v) rep.regions[v].push_back(v);
    for (int t = 0; t < (int)edges.size(); ++t) {
        rep.regions[edges[t].first].push_back(n + t);
        rep.regions[edges[t].second].push_back(n + t);
    }
    return rep;
}

inline VerifyResult verify_representation(const Graph& g, const RIGRepresentation& rep) {
    if ((int)rep.regions.size() != g.vertex_count())
        return {false, "region count " + std::to_string(rep.regions.size()) +
                           " does not match vertex count " + std::to_string(g.vertex_count())};
    std::vector<Bitset> masks;
    try {
        for (int r = 0; r < (int)rep.regions.size(); ++r)
            masks.push_back(detail::region_mask(rep, r));
    } catch (const std::invalid_argument& e) {
        return {false, e.what()};
    }
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b) {
            bool meet = masks[a].intersects(masks[b]);
            bool edge = g.has_edge(a, b);
            if (edge && !meet)
                return {false, "missing edge (" + std::to_string(a) + "," + std::to_string(b) +
                                   "): regions do not intersect"};
            if (!edge && meet)
                return {false, "extra edge (" + std::to_string(a) + "," + std::to_string(b) +
                                   "): regions of non-adjacent vertices intersect"};
        }
    return {true, ""};
}

// Exhaustive search for a representation of g over host with regions of at
// most max_region_size vertices (default: no bound below the host size).
// Regions are assigned to g's vertices in id order; candidates are the
// connected host subsets that meet every earlier neighbor's region and
// avoid every earlier non-neighbor's region, enumerated anchored at their
// minimum vertex. Absent means no representation within the size bound.
inline RigSearchOutcome find_rig_representation(const Graph& g, const Graph& host,
                                                int max_region_size = -1, long long budget = -1) {
    if (g.vertex_count() == 0 || host.vertex_count() == 0)
        throw std::invalid_argument("find_rig_representation: graphs must be non-empty");
    const int k = g.vertex_count();
    const int H = host.vertex_count();
    const int cap = max_region_size < 0 ? H : std::min(max_region_size, H);
    RigSearchOutcome out;
    if (cap == 0) return out;

    auto hostN = host.neighborhood_masks();
    std::vector<Bitset> chosen(k, Bitset(H));
    std::vector<std::vector<int>> nbr_before(k), nonnbr_before(k);
    for (int v = 0; v < k; ++v)
        for (int u = 0; u < v; ++u)
            (g.has_edge(u, v) ? nbr_before[v] : nonnbr_before[v]).push_back(u);

    long long nodes = 0;
    auto charge = [&]() {
        ++nodes;
        if (budget >= 0 && nodes >= budget) throw detail::BudgetExhausted{};
    };

    std::function<bool(int)> place = [&](int v) -> bool {
        charge();
        if (v == k) return true;
        Bitset region(H);
        for (int i = 0; i < H; ++i) region.set(i);
        for (int u : nonnbr_before[v]) region.subtract(chosen[u]);
        std::vector<Bitset> frontiers;
        for (int u : nbr_before[v]) {
            Bitset f = chosen[u] & region;
            if (f.none()) return false;
            frontiers.push_back(std::move(f));
        }
        auto hits_all = [&](const Bitset& s) {
            for (const auto& f : frontiers)
                if (!f.intersects(s)) return false;
            return true;
        };
        std::function<bool(Bitset&, Bitset, Bitset)> expand = [&](Bitset& s, Bitset cand,
                                                                  Bitset banned) -> bool {
            charge();
            if (hits_all(s)) {
                chosen[v] = s;
                if (place(v + 1)) return true;
            }
            if (s.count() >= cap) return false;
            while (cand.any()) {
                int x = cand.next(0);
                cand.reset(x);
                Bitset s2 = s;
                s2.set(x);
                Bitset add = hostN[x] & region;
                add.subtract(s2);
                add.subtract(banned);
                Bitset cand2 = cand | add;
                if (expand(s2, cand2, banned)) return true;
                banned.set(x);
            }
            return false;
        };
        Bitset banned(H);
        for (int a = region.next(0); a >= 0; a = region.next(a + 1)) {
            Bitset s(H);
            s.set(a);
            Bitset cand = hostN[a] & region;
            cand.subtract(banned);
            cand.reset(a);
            if (expand(s, cand, banned)) return true;
            banned.set(a);
        }
        return false;
    };

    try {
        if (place(0)) {
            RIGRepresentation rep;
            rep.host = host;
            rep.regions.resize(k);
            for (int v = 0; v < k; ++v) rep.regions[v] = chosen[v].to_vector();
            auto check = verify_representation(g, rep);
            if (!check.ok)
                throw std::logic_error("find_rig_representation: witness failed verification: " +
                                       check.violation);
            out.outcome = Outcome::Found;
            out.rep = std::move(rep);
        } else {
            out.outcome = Outcome::Absent;
        }
    } catch (const detail::BudgetExhausted&) {
        out.outcome = Outcome::Unknown;
    }
    out.nodes_used = nodes;
    return out;
}

// Given a representation of some graph Gamma over rep.host and an induced
// model m of subdivide(h,1) in Gamma, constructs an ordinary model of h in
// rep.host. For every pattern edge, a shortest host path inside the
// subdivision branch set's region union connects the two branching region
// unions; its interior is split at the midpoint, ties toward the smaller
// endpoint of the pattern edge.
inline MinorModel extract_minor_from_rig(const Graph& h, const RIGRepresentation& rep,
                                         const MinorModel& m) {
    if (m.kind != ModelKind::Induced)
        throw std::invalid_argument("extract_minor_from_rig: model must be an induced model");
    const Graph gamma = realize(rep);
    const Graph pattern = subdivide(h, 1);
    auto check = verify_model(pattern, gamma, m);
    if (!check.ok)
        throw std::invalid_argument("extract_minor_from_rig: model invalid: " + check.violation);

    const int H = rep.host.vertex_count();
    const int hn = h.vertex_count();
    std::vector<Bitset> masks;
    for (int r = 0; r < gamma.vertex_count(); ++r) masks.push_back(detail::region_mask(rep, r));

    auto union_of = [&](const std::vector<VertexId>& branch) {
        Bitset u(H);
        for (VertexId x : branch) u |= masks[x];
        return u;
    };
    std::vector<Bitset> w(hn, Bitset(H));
    for (int v = 0; v < hn; ++v) w[v] = union_of(m.assignment[v]);

    auto edges = h.edges();
    for (int t = 0; t < (int)edges.size(); ++t) {
        auto [u, v] = edges[t];
        Bitset ureg = union_of(m.assignment[hn + t]);
        Bitset a = w[u] & ureg;
        Bitset b = w[v] & ureg;
        if (a.none() || b.none())
            throw std::logic_error("extract_minor_from_rig: branch sets of edge (" +
                                   std::to_string(u) + "," + std::to_string(v) +
                                   ") do not meet the subdivision region");
        // shortest path from a to b inside the region union
        std::vector<int> parent(H, -2);
        std::queue<int> q;
        for (int x = a.next(0); x >= 0; x = a.next(x + 1)) {
            parent[x] = -1;
            q.push(x);
        }
        int goal = -1;
        while (!q.empty() && goal < 0) {
            int x = q.front();
            q.pop();
            for (VertexId y : rep.host.neighbors(x)) {
                if (!ureg.test(y) || parent[y] != -2) continue;
                parent[y] = x;
                if (b.test(y)) {
                    goal = y;
                    break;
                }
                q.push(y);
            }
        }
        if (goal < 0)
            throw std::logic_error("extract_minor_from_rig: no connecting path for edge (" +
                                   std::to_string(u) + "," + std::to_string(v) + ")");
        std::vector<int> path;
        for (int x = goal; x >= 0; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        const int interior = (int)path.size() - 2;
        if (interior <= 0) continue;  // already adjacent
        const int to_u = (interior + 1) / 2;
        for (int i = 1; i <= interior; ++i)
            (i <= to_u ? w[u] : w[v]).set(path[i]);
    }

    MinorModel out;
    out.kind = ModelKind::Ordinary;
    out.assignment.resize(hn);
    for (int v = 0; v < hn; ++v) out.assignment[v] = w[v].to_vector();
    auto final_check = verify_model(h, rep.host, out);
    if (!final_check.ok)
        throw std::logic_error("extract_minor_from_rig: result failed verification: " +
                               final_check.violation);
    return out;
}

} // namespace gridrig
