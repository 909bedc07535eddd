#pragma once

// Reference implementations used only by the tests. Each one recomputes a
// quantity the library also computes, by a deliberately different and
// slower route, so the two can be compared on small inputs.

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "gridrig/graph.hpp"

namespace oracles {

// Girth by edge deletion: the shortest cycle through edge (u,v) is one
// more than the shortest u-v path avoiding that edge.
inline gridrig::GirthValue girth_by_deletion(const gridrig::Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    for (auto [u, v] : g.edges()) {
        std::vector<int> dist(n, -1);
        dist[u] = 0;
        std::queue<int> q;
        q.push(u);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (gridrig::VertexId y : g.neighbors(x)) {
                if (x == u && y == v) continue;
                if (x == v && y == u) continue;
                if (dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    return best < 0 ? gridrig::GirthValue::unbounded() : gridrig::GirthValue::finite(best);
}

// Isomorphism by trying every bijection. Only sensible for tiny graphs.
inline bool iso_by_permutation(const gridrig::Graph& a, const gridrig::Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Vertex sets of all non-empty connected induced subgraphs.
inline std::vector<std::vector<gridrig::VertexId>> connected_subsets(const gridrig::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<gridrig::VertexId>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned start = mask & (~mask + 1);
        unsigned reach = start, old = 0;
        while (reach != old) {
            old = reach;
            for (int v = 0; v < n; ++v)
                if (reach >> v & 1)
                    for (gridrig::VertexId w : g.neighbors(v))
                        if (mask >> w & 1) reach |= 1u << w;
        }
        if (reach != mask) continue;
        std::vector<gridrig::VertexId> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        out.push_back(std::move(verts));
    }
    return out;
}

} // namespace oracles
