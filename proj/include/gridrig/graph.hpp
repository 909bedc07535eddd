#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, with optional
// structural labels that record where a vertex came from (grid position,
// subdivision point, attachment path, ...). No loops, no parallel edges.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridrig/bitset.hpp"

namespace gridrig {

using VertexId = int;

enum class Role {
    Plain,
    Grid,             // grid vertex at (col, row)
    Apex,             // the dominating vertex of an apex grid
    EdgeSubdivision,  // index-th subdivision vertex of edge {end_a, end_b}
    ApexSubdivision,  // index-th subdivision vertex of the edge grid(col,row)-apex
    Path,             // pos-th vertex of attachment path number `path`
};

struct VertexLabel {
    Role role = Role::Plain;
    int copy = 0;              // 1-based copy index, 0 when not part of a copy
    int col = 0, row = 0;      // Grid, ApexSubdivision
    VertexId end_a = -1, end_b = -1;  // EdgeSubdivision, ids in the pre-subdivision graph
    int index = 0;             // subdivision position, 1..l counted from the smaller endpoint
    int path = 0, pos = 0;     // Path, both 1-based

    bool operator==(const VertexLabel&) const = default;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n), labels_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return (int)adj_.size(); }
    int edge_count() const { return edge_count_; }

    VertexId add_vertex(VertexLabel label = {}) {
        adj_.emplace_back();
        labels_.push_back(label);
        return (int)adj_.size() - 1;
    }

    // Returns false if the edge was already present. Loops are rejected.
    bool add_edge(VertexId u, VertexId v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: loop at vertex " + std::to_string(u));
        auto& au = adj_[u];
        auto it = std::lower_bound(au.begin(), au.end(), v);
        if (it != au.end() && *it == v) return false;
        au.insert(it, v);
        auto& av = adj_[v];
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
        ++edge_count_;
        return true;
    }

    bool has_edge(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& au = adj_[u];
        return std::binary_search(au.begin(), au.end(), v);
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(VertexId v) const { check_vertex(v); return (int)adj_[v].size(); }

    const VertexLabel& label(VertexId v) const { check_vertex(v); return labels_[v]; }
    void set_label(VertexId v, VertexLabel label) { check_vertex(v); labels_[v] = std::move(label); }

    // Edges as (u, v) with u < v, sorted ascending.
    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(edge_count_);
        for (VertexId u = 0; u < vertex_count(); ++u)
            for (VertexId v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Component id per vertex, numbered 0.. in order of smallest contained vertex.
    std::vector<int> component_ids() const {
        std::vector<int> comp(vertex_count(), -1);
        int next_id = 0;
        std::vector<VertexId> stack;
        for (VertexId s = 0; s < vertex_count(); ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = next_id;
            stack.push_back(s);
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (VertexId w : adj_[u])
                    if (comp[w] < 0) { comp[w] = next_id; stack.push_back(w); }
            }
            ++next_id;
        }
        return comp;
    }

    int component_count() const {
        auto comp = component_ids();
        return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    }

    bool is_connected() const { return vertex_count() <= 1 || component_count() == 1; }

    // Neighborhood bitmasks, one per vertex; used by the search cores.
    std::vector<Bitset> neighborhood_masks() const {
        std::vector<Bitset> nb(vertex_count(), Bitset(vertex_count()));
        for (VertexId u = 0; u < vertex_count(); ++u)
            for (VertexId v : adj_[u]) nb[u].set(v);
        return nb;
    }

    bool operator==(const Graph& o) const {
        return adj_ == o.adj_ && labels_ == o.labels_;
    }

private:
    void check_vertex(VertexId v) const {
        if (v < 0 || v >= (int)adj_.size())
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    }

    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexLabel> labels_;
    int edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Girth

// Length of a shortest cycle; acyclic graphs have unbounded girth.
class GirthValue {
public:
    static GirthValue unbounded() { return GirthValue(); }
    static GirthValue finite(int length) {
        if (length < 3) throw std::invalid_argument("cycle length below 3");
        GirthValue g;
        g.length_ = length;
        return g;
    }

    bool is_unbounded() const { return length_ == 0; }
    int length() const {
        if (is_unbounded()) throw std::logic_error("girth is unbounded");
        return length_;
    }

    bool operator==(const GirthValue&) const = default;

private:
    int length_ = 0;
};

// Shortest cycle via breadth-first search from every vertex: the first
// non-tree edge seen from root s closes a walk of length dist[u]+dist[v]+1,
// which is a cycle-length upper bound, and is exact for roots on a shortest
// cycle. Each BFS stops expanding beyond half the best length found so far.
inline GirthValue girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    std::vector<VertexId> queue(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        dist[s] = 0;
        parent[s] = -1;
        queue[tail++] = s;
        while (head < tail) {
            VertexId u = queue[head++];
            if (best > 0 && 2 * dist[u] >= best) break;
            for (VertexId v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue[tail++] = v;
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best < 0 ? GirthValue::unbounded() : GirthValue::finite(best);
}

// ---------------------------------------------------------------------------
// Subdivision

// Replaces every edge by a path with l internal vertices (l >= 1). Branching
// vertices keep their ids and labels; the i-th new vertex of edge {a,b}
// (a < b, counted from a) is labelled EdgeSubdivision{a, b, i}. New vertices
// are appended in sorted edge order.
inline Graph subdivide(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("subdivide: l must be >= 1");
    Graph out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.set_label(v, g.label(v));
    for (auto [a, b] : g.edges()) {
        int copy = g.label(a).copy == g.label(b).copy ? g.label(a).copy : 0;
        VertexId prev = a;
        for (int i = 1; i <= l; ++i) {
            VertexLabel lab;
            lab.role = Role::EdgeSubdivision;
            lab.copy = copy;
            lab.end_a = a;
            lab.end_b = b;
            lab.index = i;
            VertexId w = out.add_vertex(lab);
            out.add_edge(prev, w);
            prev = w;
        }
        out.add_edge(prev, b);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Disjoint copies

// k vertex-disjoint copies laid out consecutively; copy c (1-based) maps
// vertex v of g to (c-1)*|V(g)| + v, and every label gets copy = c.
inline Graph disjoint_copies(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("disjoint_copies: k must be >= 1");
    const int n = g.vertex_count();
    Graph out(n * k);
    for (int c = 0; c < k; ++c) {
        for (VertexId v = 0; v < n; ++v) {
            VertexLabel lab = g.label(v);
            lab.copy = c + 1;
            out.set_label(c * n + v, lab);
        }
        for (auto [u, v] : g.edges()) out.add_edge(c * n + u, c * n + v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Contraction

// Contracts each part to a single vertex. Parts must be non-empty, pairwise
// disjoint and connected. Untouched vertices come first (ascending by old id),
// then one vertex per part in input order; loops and parallel edges are
// suppressed. Contracted vertices get a Plain label.
inline Graph contract_sets(const Graph& g, const std::vector<std::vector<VertexId>>& parts) {
    const int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty())
            throw std::invalid_argument("contract_sets: part " + std::to_string(p) + " is empty");
        for (VertexId v : parts[p]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("contract_sets: part " + std::to_string(p) +
                                            " has out-of-range vertex " + std::to_string(v));
            if (part_of[v] >= 0)
                throw std::invalid_argument("contract_sets: vertex " + std::to_string(v) +
                                            " appears in two parts");
            part_of[v] = (int)p;
        }
    }
    // connectivity of each part
    for (size_t p = 0; p < parts.size(); ++p) {
        std::vector<char> seen(n, 0);
        std::vector<VertexId> stack{parts[p][0]};
        seen[parts[p][0]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            ++reached;
            for (VertexId w : g.neighbors(u))
                if (part_of[w] == (int)p && !seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        if (reached != (int)parts[p].size())
            throw std::invalid_argument("contract_sets: part " + std::to_string(p) +
                                        " is not connected");
    }

    std::vector<VertexId> new_id(n, -1);
    int next = 0;
    for (VertexId v = 0; v < n; ++v)
        if (part_of[v] < 0) new_id[v] = next++;
    int first_part_id = next;
    Graph out(next + (int)parts.size());
    for (VertexId v = 0; v < n; ++v)
        if (part_of[v] < 0) out.set_label(new_id[v], g.label(v));
    for (VertexId v = 0; v < n; ++v)
        if (part_of[v] >= 0) new_id[v] = first_part_id + part_of[v];
    for (auto [u, v] : g.edges()) {
        VertexId a = new_id[u], b = new_id[v];
        if (a != b) out.add_edge(a, b);
    }
    return out;
}

// Subgraph induced on `verts`, which must be distinct and in range. The
// i-th smallest listed vertex becomes vertex i; labels are kept.
inline Graph induced_subgraph(const Graph& g, std::vector<VertexId> verts) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex");
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < (int)verts.size(); ++i) {
        VertexId v = verts[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range");
        local[v] = i;
    }
    Graph out((int)verts.size());
    for (int i = 0; i < (int)verts.size(); ++i) {
        out.set_label(i, g.label(verts[i]));
        for (VertexId w : g.neighbors(verts[i]))
            if (local[w] > i) out.add_edge(i, local[w]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Small named graphs used all over the tests and the CLI.

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph grid_graph(int cols, int rows) {
    Graph g(cols * rows);
    auto id = [rows](int c, int r) { return c * rows + r; };
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) {
            if (c + 1 < cols) g.add_edge(id(c, r), id(c + 1, r));
            if (r + 1 < rows) g.add_edge(id(c, r), id(c, r + 1));
        }
    return g;
}

} // namespace gridrig
