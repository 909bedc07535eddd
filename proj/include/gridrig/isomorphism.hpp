#pragma once

// Isomorphism testing for small graphs: colour refinement to cut the search
// space, then backtracking over colour-compatible assignments. Intended for
// deduplication of small corpora, not for large instances, hence the size
// guard.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gridrig/graph.hpp"

namespace gridrig {

namespace detail {

// Iterated neighbour-colour refinement with colour ids that are a function
// of the signature alone, so they are comparable across two graphs.
inline std::vector<int> cross_normalized_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (VertexId v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round <= n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sigs(n);
        for (VertexId v = 0; v < n; ++v) {
            std::vector<int> around;
            around.reserve(g.degree(v));
            for (VertexId w : g.neighbors(v)) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            sigs[v] = {color[v], std::move(around)};
        }
        // rank signatures globally so that ids are a function of the
        // signature alone, not of vertex order
        std::vector<std::pair<int, std::vector<int>>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (VertexId v = 0; v < n; ++v)
            next[v] = (int)(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

} // namespace detail

// Exact isomorphism test. Guarded at 30 vertices; pass force=true to go up
// to 64 (the adjacency masks are machine words).
inline bool are_isomorphic(const Graph& g1, const Graph& g2, bool force = false) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    if (n > 64)
        throw std::invalid_argument("are_isomorphic: at most 64 vertices supported");
    if (n > 30 && !force)
        throw std::invalid_argument(
            "are_isomorphic: more than 30 vertices, pass force=true to run anyway");
    if (n == 0) return true;

    auto c1 = detail::cross_normalized_colors(g1);
    auto c2 = detail::cross_normalized_colors(g2);
    {
        std::vector<int> s1 = c1, s2 = c2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }

    std::vector<std::uint64_t> adj1(n, 0), adj2(n, 0);
    for (auto [u, v] : g1.edges()) {
        adj1[u] |= std::uint64_t(1) << v;
        adj1[v] |= std::uint64_t(1) << u;
    }
    for (auto [u, v] : g2.edges()) {
        adj2[u] |= std::uint64_t(1) << v;
        adj2[v] |= std::uint64_t(1) << u;
    }

    // static matching order: most constrained first, preferring vertices
    // adjacent to already ordered ones
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> picked(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_adj = -1, best_deg = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (picked[v]) continue;
            int adj_count = 0;
            for (VertexId w : g1.neighbors(v)) adj_count += picked[w];
            if (adj_count > best_adj ||
                (adj_count == best_adj && g1.degree(v) > best_deg)) {
                best = v;
                best_adj = adj_count;
                best_deg = g1.degree(v);
            }
        }
        picked[best] = 1;
        order.push_back(best);
    }

    std::vector<int> map(n, -1);
    std::uint64_t used2 = 0;

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        VertexId u = order[depth];
        std::uint64_t req = 0;
        for (VertexId a : g1.neighbors(u))
            if (map[a] >= 0) req |= std::uint64_t(1) << map[a];
        for (VertexId v = 0; v < n; ++v) {
            if ((used2 >> v) & 1) continue;
            if (c2[v] != c1[u]) continue;
            if ((adj2[v] & used2) != req) continue;
            map[u] = v;
            used2 |= std::uint64_t(1) << v;
            if (self(self, depth + 1)) return true;
            map[u] = -1;
            used2 &= ~(std::uint64_t(1) << v);
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace gridrig
