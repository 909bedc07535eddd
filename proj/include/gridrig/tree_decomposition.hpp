#pragma once

// Tree decompositions and the toolbox around them: verification with width
// and adhesion, torsos, clique sums, and the Helly property of subtrees of a
// tree (pairwise intersecting subtrees have a common node).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridrig/bitset.hpp"
#include "gridrig/graph.hpp"

namespace gridrig {

struct TreeDecomposition {
    Graph tree;
    std::vector<std::vector<VertexId>> bags;  // bags[x] for tree node x
};

struct TdVerifyResult {
    bool ok = true;
    std::string violation;
    int width = -1;
    int adhesion = 0;
};

namespace detail {

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.is_connected() &&
           g.edge_count() == g.vertex_count() - 1;
}

// Validates one node subset of a tree; returns its mask.
inline Bitset subtree_mask(const Graph& tree, const std::vector<int>& nodes, int index) {
    const int n = tree.vertex_count();
    if (nodes.empty())
        throw std::invalid_argument("subtree " + std::to_string(index) + " is empty");
    Bitset mask(n);
    for (int x : nodes) {
        if (x < 0 || x >= n)
            throw std::invalid_argument("subtree " + std::to_string(index) +
                                        " contains invalid node " + std::to_string(x));
        mask.set(x);
    }
    Bitset seen(n);
    std::vector<int> stack{nodes[0]};
    seen.set(nodes[0]);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : tree.neighbors(x))
            if (mask.test(y) && !seen.test(y)) {
                seen.set(y);
                stack.push_back(y);
            }
    }
    if (seen != mask)
        throw std::invalid_argument("subtree " + std::to_string(index) + " is not connected");
    return mask;
}

} // namespace detail

inline TdVerifyResult verify_td(const Graph& g, const TreeDecomposition& td) {
    TdVerifyResult res;
    if (td.tree.vertex_count() == 0) {
        if (g.vertex_count() == 0) return res;
        return {false, "decomposition tree is empty", -1, 0};
    }
    if (!detail::is_tree(td.tree)) return {false, "decomposition tree is not a tree", -1, 0};
    if ((int)td.bags.size() != td.tree.vertex_count())
        return {false, "expected " + std::to_string(td.tree.vertex_count()) + " bags, got " +
                           std::to_string(td.bags.size()),
                -1, 0};

    const int n = g.vertex_count();
    const int t = td.tree.vertex_count();
    std::vector<Bitset> bag_masks(t, Bitset(n));
    for (int x = 0; x < t; ++x)
        for (VertexId v : td.bags[x]) {
            if (v < 0 || v >= n)
                return {false, "bag " + std::to_string(x) + " contains invalid vertex " +
                                   std::to_string(v),
                        -1, 0};
            if (bag_masks[x].test(v))
                return {false, "bag " + std::to_string(x) + " lists vertex " + std::to_string(v) +
                                   " twice",
                        -1, 0};
            bag_masks[x].set(v);
        }

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int x = 0; x < t && !covered; ++x)
            covered = bag_masks[x].test(u) && bag_masks[x].test(v);
        if (!covered)
            return {false, "uncovered edge (" + std::to_string(u) + "," + std::to_string(v) + ")",
                    -1, 0};
    }

    for (VertexId v = 0; v < n; ++v) {
        int start = -1, trace_size = 0;
        for (int x = 0; x < t; ++x)
            if (bag_masks[x].test(v)) {
                if (start < 0) start = x;
                ++trace_size;
            }
        if (start < 0)
            return {false, "vertex " + std::to_string(v) + " appears in no bag", -1, 0};
        Bitset seen(t);
        seen.set(start);
        std::vector<int> stack{start};
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : td.tree.neighbors(x))
                if (bag_masks[y].test(v) && !seen.test(y)) {
                    seen.set(y);
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != trace_size)
            return {false, "bag trace of vertex " + std::to_string(v) + " is disconnected", -1, 0};
    }

    res.width = -1;
    for (int x = 0; x < t; ++x) res.width = std::max(res.width, (int)td.bags[x].size() - 1);
    res.adhesion = 0;
    for (auto [x, y] : td.tree.edges())
        res.adhesion = std::max(res.adhesion, (bag_masks[x] & bag_masks[y]).count());
    return res;
}

struct TorsoResult {
    Graph graph;
    std::vector<VertexId> vertices;  // torso vertex i is g's vertices[i]
};

// The bag of `node` with edges of g[bag] plus a clique on each intersection
// with a neighboring bag.
inline TorsoResult torso(const Graph& g, const TreeDecomposition& td, int node) {
    auto check = verify_td(g, td);
    if (!check.ok) throw std::invalid_argument("torso: invalid decomposition: " + check.violation);
    if (node < 0 || node >= td.tree.vertex_count())
        throw std::invalid_argument("torso: node " + std::to_string(node) + " out of range");

    TorsoResult res;
    res.vertices = td.bags[node];
    std::sort(res.vertices.begin(), res.vertices.end());
    res.graph = induced_subgraph(g, res.vertices);
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < (int)res.vertices.size(); ++i) local[res.vertices[i]] = i;
    for (int y : td.tree.neighbors(node)) {
        std::vector<int> shared;
        for (VertexId v : td.bags[y])
            if (local[v] >= 0) shared.push_back(local[v]);
        for (size_t a = 0; a < shared.size(); ++a)
            for (size_t b = a + 1; b < shared.size(); ++b)
                res.graph.add_edge(shared[a], shared[b]);
    }
    return res;
}

// Glues g2 onto g1 by identifying the clique c2 with the clique c1
// entrywise, optionally deleting some edges of the shared clique. Vertices
// of g1 keep their ids; the remaining vertices of g2 are appended in
// ascending order. drop_edges lists pairs of c1 vertices.
inline Graph clique_sum(const Graph& g1, const std::vector<VertexId>& c1, const Graph& g2,
                        const std::vector<VertexId>& c2,
                        const std::vector<std::pair<VertexId, VertexId>>& drop_edges = {}) {
    if (c1.size() != c2.size())
        throw std::invalid_argument("clique_sum: cliques have different sizes");
    auto check_clique = [](const Graph& g, const std::vector<VertexId>& c, const char* name) {
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 0 || c[i] >= g.vertex_count())
                throw std::invalid_argument(std::string("clique_sum: ") + name +
                                            " contains invalid vertex " + std::to_string(c[i]));
            for (size_t j = i + 1; j < c.size(); ++j) {
                if (c[i] == c[j])
                    throw std::invalid_argument(std::string("clique_sum: ") + name +
                                                " lists vertex " + std::to_string(c[i]) +
                                                " twice");
                if (!g.has_edge(c[i], c[j]))
                    throw std::invalid_argument(std::string("clique_sum: ") + name +
                                                " is not a clique");
            }
        }
    };
    check_clique(g1, c1, "c1");
    check_clique(g2, c2, "c2");

    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    std::vector<int> map2(n2, -1);
    for (size_t i = 0; i < c2.size(); ++i) map2[c2[i]] = c1[i];
    int next = n1;
    std::vector<VertexId> appended;
    for (VertexId v = 0; v < n2; ++v)
        if (map2[v] < 0) {
            map2[v] = next++;
            appended.push_back(v);
        }

    Graph out(next);
    for (VertexId v = 0; v < n1; ++v) out.set_label(v, g1.label(v));
    for (VertexId v : appended) out.set_label(map2[v], g2.label(v));
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(map2[u], map2[v]);

    if (!drop_edges.empty()) {
        Bitset in_c1(n1 > 0 ? n1 : 1);
        for (VertexId v : c1) in_c1.set(v);
        std::vector<std::pair<VertexId, VertexId>> keep;
        for (auto [u, v] : drop_edges) {
            if (u < 0 || u >= n1 || v < 0 || v >= n1 || !in_c1.test(u) || !in_c1.test(v) ||
                u == v)
                throw std::invalid_argument("clique_sum: dropped edge (" + std::to_string(u) +
                                            "," + std::to_string(v) +
                                            ") is not inside the shared clique");
        }
        for (auto [u, v] : out.edges()) {
            bool dropped = false;
            for (auto [a, b] : drop_edges)
                if ((a == u && b == v) || (a == v && b == u)) {
                    dropped = true;
                    break;
                }
            if (!dropped) keep.push_back({u, v});
        }
        Graph filtered(next);
        for (VertexId v = 0; v < next; ++v) filtered.set_label(v, out.label(v));
        for (auto [u, v] : keep) filtered.add_edge(u, v);
        return filtered;
    }
    return out;
}

struct HellyResult {
    std::optional<int> node;                        // a node common to all subtrees
    std::optional<std::pair<int, int>> disjoint_pair;  // witness when there is none
};

// For subtrees of a tree, pairwise intersection is equivalent to a common
// node. Returns the smallest common node, or the lexicographically smallest
// disjoint pair as the witness.
inline HellyResult helly_common_node(const Graph& tree, const std::vector<std::vector<int>>& subtrees) {
    if (!detail::is_tree(tree)) throw std::invalid_argument("helly_common_node: not a tree");
    const int n = tree.vertex_count();
    std::vector<Bitset> masks;
    masks.reserve(subtrees.size());
    for (int i = 0; i < (int)subtrees.size(); ++i)
        masks.push_back(detail::subtree_mask(tree, subtrees[i], i));

    Bitset common(n);
    for (int x = 0; x < n; ++x) common.set(x);
    for (const auto& m : masks) common &= m;
    if (common.any()) return {common.next(0), std::nullopt};

    for (int i = 0; i < (int)masks.size(); ++i)
        for (int j = i + 1; j < (int)masks.size(); ++j)
            if (!masks[i].intersects(masks[j])) return {std::nullopt, std::make_pair(i, j)};
    throw std::logic_error("helly_common_node: pairwise intersecting subtrees with empty "
                           "intersection should not exist in a tree");
}

} // namespace gridrig
