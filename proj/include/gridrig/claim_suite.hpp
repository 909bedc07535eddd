#pragma once

// The claim battery: one self-contained check per verified property of the
// constructions and solvers, runnable at two sizes. Fast keeps every check
// but trims parameters; Full runs the sizes the results are stated for.
// Output is deterministic; wall-clock times are reported separately.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gridrig/constructions.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/isomorphism.hpp"
#include "gridrig/lifting.hpp"
#include "gridrig/minor_search.hpp"
#include "gridrig/rig.hpp"
#include "gridrig/tree_decomposition.hpp"

namespace gridrig {

enum class SuiteLevel { Fast, Full };

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0;  // 0 means no bound enforced
    bool within_limit() const { return limit_seconds == 0.0 || seconds <= limit_seconds; }
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    bool all_pass() const {
        for (const SuiteCheck& c : checks)
            if (!c.pass || !c.within_limit()) return false;
        return true;
    }
};

namespace detail {

// Exact canonical form for graphs on at most 8 vertices: iterated color
// refinement, then the minimum adjacency bitstring over all orderings that
// list the (canonical) color classes in sequence.
inline uint64_t canonical_code_masks(int n, const uint8_t adj[8]) {
    int color[8] = {};
    for (int v = 0; v < n; ++v) color[v] = std::popcount((unsigned)adj[v]);
    for (;;) {
        uint64_t sig[8];
        for (int v = 0; v < n; ++v) {
            int nc[8], cnt = 0;
            for (int w = 0; w < n; ++w)
                if (adj[v] >> w & 1) nc[cnt++] = color[w];
            std::sort(nc, nc + cnt);
            uint64_t s = (uint64_t)color[v];
            for (int t = 0; t < cnt; ++t) s = s * 9 + (uint64_t)(nc[t] + 1);
            sig[v] = s;
        }
        uint64_t sorted[8];
        std::copy(sig, sig + n, sorted);
        std::sort(sorted, sorted + n);
        int classes = (int)(std::unique(sorted, sorted + n) - sorted);
        int before = 0;
        {
            int seen[8], c = 0;
            for (int v = 0; v < n; ++v) {
                bool dup = false;
                for (int t = 0; t < c; ++t) dup = dup || seen[t] == color[v];
                if (!dup) seen[c++] = color[v];
            }
            before = c;
        }
        for (int v = 0; v < n; ++v)
            color[v] = (int)(std::lower_bound(sorted, sorted + classes, sig[v]) - sorted);
        if (classes == before) break;
    }

    std::vector<std::vector<int>> classes;
    for (int c = 0; c < n; ++c) {
        std::vector<int> cls;
        for (int v = 0; v < n; ++v)
            if (color[v] == c) cls.push_back(v);
        if (!cls.empty()) classes.push_back(cls);
    }
    std::vector<int> order(n);
    uint64_t best = ~0ull;
    std::function<void(size_t, int)> rec = [&](size_t ci, int at) {
        if (ci == classes.size()) {
            uint64_t bits = 0;
            int t = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++t)
                    if (adj[order[i]] >> order[j] & 1) bits |= 1ull << t;
            best = std::min(best, bits);
            return;
        }
        std::vector<int> cls = classes[ci];
        do {
            std::copy(cls.begin(), cls.end(), order.begin() + at);
            rec(ci + 1, at + (int)cls.size());
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    rec(0, 0);
    return (uint64_t)n << 56 | best;
}

inline uint64_t canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_code: at most 8 vertices supported");
    uint8_t adj[8] = {};
    for (auto [u, v] : g.edges()) {
        adj[u] |= (uint8_t)(1u << v);
        adj[v] |= (uint8_t)(1u << u);
    }
    return canonical_code_masks(n, adj);
}

inline Graph graph_from_masks(int n, const uint8_t adj[8]) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u] >> v & 1) g.add_edge(u, v);
    return g;
}

// All connected graphs on 1..max_n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graph_corpus(int max_n) {
    if (max_n > 8) throw std::invalid_argument("corpus: at most 8 vertices supported");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::unordered_set<uint64_t> seen;
        for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            uint8_t adj[8] = {};
            int t = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++t)
                    if (mask >> t & 1) {
                        adj[i] |= (uint8_t)(1u << j);
                        adj[j] |= (uint8_t)(1u << i);
                    }
            unsigned reach = 1, old = 0;
            while (reach != old) {
                old = reach;
                for (int v = 0; v < n; ++v)
                    if (reach >> v & 1) reach |= adj[v];
            }
            if (reach != (1u << n) - 1) continue;
            if (seen.insert(canonical_code_masks(n, adj)).second)
                out.push_back(graph_from_masks(n, adj));
        }
    }
    return out;
}

// All trees on 1..max_n vertices, one per isomorphism class, via
// sequence decoding.
inline std::vector<Graph> tree_corpus(int max_n) {
    if (max_n > 8) throw std::invalid_argument("corpus: at most 8 vertices supported");
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        if (n == 1) {
            out.push_back(Graph(1));
            continue;
        }
        if (n == 2) {
            out.push_back(path_graph(2));
            continue;
        }
        std::unordered_set<uint64_t> seen;
        std::vector<int> code(n - 2, 0);
        for (;;) {
            int degree[8];
            for (int v = 0; v < n; ++v) degree[v] = 1;
            for (int c : code) ++degree[c];
            uint8_t adj[8] = {};
            int deg2[8];
            std::copy(degree, degree + n, deg2);
            for (int c : code) {
                int leaf = 0;
                while (deg2[leaf] != 1) ++leaf;
                adj[leaf] |= (uint8_t)(1u << c);
                adj[c] |= (uint8_t)(1u << leaf);
                deg2[leaf] = 0;
                --deg2[c];
            }
            int last[2], cnt = 0;
            for (int v = 0; v < n; ++v)
                if (deg2[v] == 1) last[cnt++] = v;
            adj[last[0]] |= (uint8_t)(1u << last[1]);
            adj[last[1]] |= (uint8_t)(1u << last[0]);
            if (seen.insert(canonical_code_masks(n, adj)).second)
                out.push_back(graph_from_masks(n, adj));
            int pos = n - 3;
            while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
            if (pos < 0) break;
            ++code[pos];
        }
    }
    return out;
}

// Node sets of all subtrees (connected, non-empty) of a tree on <= 8 nodes.
inline std::vector<std::vector<int>> all_subtrees(const Graph& tree) {
    const int n = tree.vertex_count();
    uint8_t adj[8] = {};
    for (auto [u, v] : tree.edges()) {
        adj[u] |= (uint8_t)(1u << v);
        adj[v] |= (uint8_t)(1u << u);
    }
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        unsigned start = mask & (~mask + 1);
        unsigned reach = start, old = 0;
        while (reach != old) {
            old = reach;
            for (int v = 0; v < n; ++v)
                if (reach >> v & 1) reach |= adj[v] & mask;
        }
        if (reach != mask) continue;
        std::vector<int> nodes;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) nodes.push_back(v);
        out.push_back(std::move(nodes));
    }
    return out;
}

} // namespace detail

inline SuiteReport run_suite(SuiteLevel level) {
    const bool full = level == SuiteLevel::Full;
    SuiteReport report;

    auto add = [&](const std::string& name, double limit,
                   const std::function<std::pair<bool, std::string>()>& fn) {
        SuiteCheck c;
        c.name = name;
        c.limit_seconds = full ? limit : 0.0;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [pass, detail] = fn();
            c.pass = pass;
            c.detail = detail;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.checks.push_back(std::move(c));
    };

    add("family-sizes", 1.0, [&]() -> std::pair<bool, std::string> {
        Graph b = build_bn(1, 2);
        ConstructionBundle g2 = build_g(2);
        bool ok = b.vertex_count() == 26 && b.edge_count() == 32;
        ok = ok && g2.graph.vertex_count() == 130 && g2.graph.edge_count() == 186;
        std::string detail = "two-copy base " + std::to_string(b.vertex_count()) + "v/" +
                             std::to_string(b.edge_count()) + "e, with paths " +
                             std::to_string(g2.graph.vertex_count()) + "v/" +
                             std::to_string(g2.graph.edge_count()) + "e";
        for (int g = 2; g <= 3; ++g) {
            ConstructionBundle gg = build_gg(g, 2);
            int base = gg.base_vertex_count();
            int expect = base * (1 + 2 * g);
            ok = ok && gg.graph.vertex_count() == expect;
            detail += ", stretch " + std::to_string(g) + ": " +
                      std::to_string(gg.graph.vertex_count()) + "v";
        }
        return {ok, detail};
    });

    add("family-girth", 60.0, [&]() -> std::pair<bool, std::string> {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 3; ++n) {
            GirthValue gv = girth(build_g(n).graph);
            ok = ok && !gv.is_unbounded() && gv.length() == 5;
            detail += "girth(G_" + std::to_string(n) + ")=" +
                      (gv.is_unbounded() ? "inf" : std::to_string(gv.length())) + " ";
        }
        for (int g = 1; g <= 3; ++g) {
            GirthValue gv = girth(build_bn(g, 2));
            ok = ok && !gv.is_unbounded() && gv.length() == 3 * (g + 1);
            detail += "girth(B_{" + std::to_string(g) + ",2})=" +
                      (gv.is_unbounded() ? "inf" : std::to_string(gv.length())) + " ";
        }
        for (int g = 5; g <= (full ? 8 : 6); ++g) {
            GirthValue gv = girth(build_gg(g, 2).graph);
            ok = ok && !gv.is_unbounded() && gv.length() >= g;
            detail += "girth(G_{" + std::to_string(g) + ",2})=" +
                      (gv.is_unbounded() ? "inf" : std::to_string(gv.length())) + " ";
        }
        detail.pop_back();
        return {ok, detail};
    });

    add("ordered-supergraph", 600.0, [&]() -> std::pair<bool, std::string> {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 3; ++n) {
            ConstructionBundle bp = build_bn_prime(1, n);
            BundleCheckResult r = check_order_contract(bp);
            ok = ok && r.ok;
            detail += "contract(n=" + std::to_string(n) + ")=" +
                      (r.ok ? "ok" : r.violation) + " ";
        }
        SearchOptions opt;
        opt.budget = 100000000;
        SearchOutcome so =
            find_model(complete_graph(6), build_bn_prime(1, 2).graph, ModelKind::Ordinary, opt);
        ok = ok && so.outcome == Outcome::Absent;
        detail += "K6-in-ordered-2: " +
                  std::string(so.outcome == Outcome::Absent  ? "absent"
                              : so.outcome == Outcome::Found ? "found"
                                                             : "unknown") +
                  " (" + std::to_string(so.nodes_used) + " nodes)";
        return {ok, detail};
    });

    add("apex-grid-cliques", 240.0, [&]() -> std::pair<bool, std::string> {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= (full ? 4 : 3); ++n) {
            SearchOutcome so = find_model(complete_graph(6), apex_grid(n), ModelKind::Ordinary);
            ok = ok && so.outcome == Outcome::Absent;
            detail += "K6-in-A" + std::to_string(n) + "=" +
                      (so.outcome == Outcome::Absent ? "absent" : "unexpected") + " ";
        }
        SearchOutcome k5 = find_model(complete_graph(5), apex_grid(3), ModelKind::Ordinary);
        ok = ok && k5.outcome == Outcome::Found;
        detail += "K5-in-A3=";
        detail += k5.outcome == Outcome::Found ? "found" : "unexpected";
        return {ok, detail};
    });

    add("solver-vs-exhaustive", 0.0, [&]() -> std::pair<bool, std::string> {
        const int max_n = full ? 7 : 6;
        std::vector<Graph> hosts = detail::connected_graph_corpus(max_n);
        static const int expected[9] = {0, 1, 1, 2, 6, 21, 112, 853, 0};
        int per_n[9] = {};
        for (const Graph& h : hosts) ++per_n[h.vertex_count()];
        bool ok = true;
        for (int n = 1; n <= max_n; ++n) ok = ok && per_n[n] == expected[n];
        if (!ok) return {false, "corpus class counts are wrong"};

        std::vector<Graph> patterns;
        patterns.push_back(complete_graph(3));
        patterns.push_back(complete_graph(4));
        patterns.push_back(cycle_graph(4));
        patterns.push_back(path_graph(4));
        patterns.push_back(complete_graph(5));
        long long agree = 0, total = 0;
        for (const Graph& h : hosts)
            for (const Graph& p : patterns) {
                auto [ord, ind] = detail::brute_force_both(p, h);
                SearchOutcome so = find_model(p, h, ModelKind::Ordinary);
                SearchOutcome si = find_model(p, h, ModelKind::Induced);
                bool good = so.outcome == (ord ? Outcome::Found : Outcome::Absent) &&
                            si.outcome == (ind ? Outcome::Found : Outcome::Absent);
                agree += good;
                total += 1;
                ok = ok && good;
            }
        return {ok, std::to_string(hosts.size()) + " hosts, " + std::to_string(agree) + "/" +
                        std::to_string(total) + " pattern checks agree"};
    });

    add("region-to-minor", 5.0, [&]() -> std::pair<bool, std::string> {
        bool ok = true;
        std::string detail;
        {
            Graph h = complete_graph(3);
            RIGRepresentation rep = canonical_subdivision_rep(cycle_graph(6));
            MinorModel m;
            m.kind = ModelKind::Induced;
            m.assignment = {{0}, {2}, {4}, {1}, {5}, {3}};
            MinorModel lifted = extract_minor_from_rig(h, rep, m);
            VerifyResult r = verify_model(h, rep.host, lifted);
            ok = ok && r.ok;
            detail += "triangle-from-hexagon=" + std::string(r.ok ? "ok" : r.violation) + " ";
        }
        {
            Graph h = complete_graph(4);
            Graph once = subdivide(h, 1);
            RIGRepresentation rep = canonical_subdivision_rep(once);
            MinorModel m;
            m.kind = ModelKind::Induced;
            m.assignment.resize(once.vertex_count());
            for (VertexId v = 0; v < once.vertex_count(); ++v) m.assignment[v] = {v};
            MinorModel lifted = extract_minor_from_rig(h, rep, m);
            VerifyResult r = verify_model(h, rep.host, lifted);
            ok = ok && r.ok;
            detail += "K4-from-its-subdivision=" + std::string(r.ok ? "ok" : r.violation);
        }
        return {ok, detail};
    });

    add("region-search", 60.0, [&]() -> std::pair<bool, std::string> {
        RigSearchOutcome none = find_rig_representation(cycle_graph(4), path_graph(10));
        RigSearchOutcome some = find_rig_representation(cycle_graph(4), subdivide(cycle_graph(4), 1));
        bool ok = none.outcome == Outcome::Absent && some.outcome == Outcome::Found;
        return {ok, std::string("C4-over-path=") +
                        (none.outcome == Outcome::Absent ? "absent" : "unexpected") +
                        " C4-over-its-subdivision=" +
                        (some.outcome == Outcome::Found ? "found" : "unexpected")};
    });

    add("copy-contraction", 30.0, [&]() -> std::pair<bool, std::string> {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 3; ++n) {
            ConstructionBundle gb = build_g(n);
            const int base = gb.base_vertex_count();
            const int spacing = gb.graph.label(gb.attach(1, 1)).pos + 1;
            const int plen = spacing * base;
            std::vector<std::vector<VertexId>> parts;
            for (const CopyRange& r : gb.copy_ranges) {
                std::vector<VertexId> copy;
                for (VertexId v = 0; v < base; ++v)
                    if (gb.graph.label(v).copy == r.copy) copy.push_back(v);
                parts.push_back(std::move(copy));
            }
            for (int j = 1; j <= n; ++j)
                for (const CopyRange& r : gb.copy_ranges) {
                    std::vector<VertexId> stretch;
                    for (int pos = spacing * r.begin + 1; pos <= spacing * r.end; ++pos)
                        stretch.push_back(base + (j - 1) * plen + pos - 1);
                    parts.push_back(std::move(stretch));
                }
            Graph contracted = contract_sets(gb.graph, parts);
            bool iso = are_isomorphic(contracted, pd_grid(n));
            ok = ok && iso;
            detail += "n=" + std::to_string(n) + (iso ? ":isomorphic " : ":different ");
        }
        detail.pop_back();
        return {ok, detail};
    });

    add("lift-pipeline", 300.0, [&]() -> std::pair<bool, std::string> {
        ConstructionBundle gb = build_g(2);
        Graph base = build_bn(1, 2);
        Graph pattern = subdivided_clique(3);
        SearchOptions opt;
        EnumerationResult models = enumerate_models(pattern, base, ModelKind::Induced, opt,
                                                    full ? 512 : 64);
        if (models.models.empty()) return {false, "no induced models found in the base graph"};
        int lifted = 0;
        for (const MinorModel& m : models.models) {
            SubdividedCliqueModel scm;
            scm.s = 3;
            scm.model = m;
            NormalizeOutcome norm = normalize_model(scm, gb);
            if (!norm.ok) return {false, "normalization obstruction: " + norm.obstruction};
            if (!check_claims(norm.model, gb).all_hold())
                return {false, "interval claims failed on a base-graph model"};
            LiftResult lr = lift_to_bprime(norm.model, gb);
            if (!lr.verdict.ok)
                return {false, "lifted model rejected: " + lr.verdict.violation};
            ++lifted;
        }
        return {true, std::to_string(lifted) + " models normalized, checked, and lifted" +
                          (models.complete ? "" : " (enumeration capped)")};
    });

    add("budgeted-search-honesty", 0.0, [&]() -> std::pair<bool, std::string> {
        SearchOptions opt;
        opt.budget = full ? 100000000 : 1000000;
        SearchOutcome so =
            find_model(subdivided_clique(6), build_g(2).graph, ModelKind::Induced, opt);
        bool ok = so.outcome != Outcome::Found;
        return {ok, std::string("outcome=") +
                        (so.outcome == Outcome::Absent    ? "absent"
                         : so.outcome == Outcome::Unknown ? "unknown"
                                                          : "found") +
                        " nodes=" + std::to_string(so.nodes_used)};
    });

    add("decomposition-checks", 60.0, [&]() -> std::pair<bool, std::string> {
        bool ok = true;
        std::string detail;
        {
            TreeDecomposition td;
            td.tree = path_graph(3);
            td.bags = {{0, 1}, {1, 2}, {2, 3}};
            TdVerifyResult r = verify_td(path_graph(4), td);
            ok = ok && r.ok && r.width == 1 && r.adhesion == 1;
            TreeDecomposition bad = td;
            bad.bags[1] = {1};
            TdVerifyResult rb = verify_td(path_graph(4), bad);
            ok = ok && !rb.ok;
            detail += std::string("path-bags=") + (r.ok ? "ok" : "bad") + " ";
        }
        {
            Graph c4 = cycle_graph(4);
            TreeDecomposition td;
            td.tree = path_graph(2);
            td.bags = {{0, 1, 3}, {1, 2, 3}};
            TdVerifyResult r = verify_td(c4, td);
            bool torsos = true;
            for (int node = 0; node < 2; ++node) {
                TorsoResult t = torso(c4, td, node);
                torsos = torsos && are_isomorphic(t.graph, complete_graph(3));
            }
            ok = ok && r.ok && r.width == 2 && r.adhesion == 2 && torsos;
            detail += std::string("cycle-torsos=") + (torsos ? "triangles" : "bad") + " ";
        }
        {
            Graph t1 = complete_graph(3), t2 = complete_graph(3);
            Graph diamond = clique_sum(t1, {0, 1}, t2, {0, 1});
            ok = ok && diamond.vertex_count() == 4 && diamond.edge_count() == 5;
            Graph p3 = clique_sum(path_graph(2), {1}, path_graph(2), {0});
            ok = ok && are_isomorphic(p3, path_graph(3));
            Graph c4 = clique_sum(t1, {0, 1}, t2, {0, 1}, {{0, 1}});
            ok = ok && are_isomorphic(c4, cycle_graph(4));
            detail += "clique-sums=ok ";
        }
        {
            long long triples = 0;
            bool helly_ok = true;
            for (const Graph& tree : detail::tree_corpus(full ? 8 : 6)) {
                auto subs = detail::all_subtrees(tree);
                std::vector<unsigned> masks;
                for (const auto& s : subs) {
                    unsigned m = 0;
                    for (int v : s) m |= 1u << v;
                    masks.push_back(m);
                }
                for (size_t a = 0; a < subs.size() && helly_ok; ++a)
                    for (size_t b = a; b < subs.size() && helly_ok; ++b)
                        for (size_t c = b; c < subs.size() && helly_ok; ++c) {
                            ++triples;
                            HellyResult hr =
                                helly_common_node(tree, {subs[a], subs[b], subs[c]});
                            unsigned common = masks[a] & masks[b] & masks[c];
                            if (common != 0) {
                                helly_ok = hr.node.has_value() &&
                                           *hr.node == std::countr_zero(common);
                            } else {
                                if (!hr.disjoint_pair.has_value()) {
                                    helly_ok = false;
                                    continue;
                                }
                                auto [x, y] = *hr.disjoint_pair;
                                const size_t idx[3] = {a, b, c};
                                helly_ok = x >= 0 && y < 3 && x < y &&
                                           (masks[idx[x]] & masks[idx[y]]) == 0;
                                for (int xx = 0; xx < 3 && helly_ok; ++xx)
                                    for (int yy = xx + 1; yy < 3 && helly_ok; ++yy) {
                                        if ((masks[idx[xx]] & masks[idx[yy]]) == 0) {
                                            helly_ok = xx == x && yy == y;
                                            xx = 3;
                                            break;
                                        }
                                    }
                            }
                        }
                if (!helly_ok) break;
            }
            ok = ok && helly_ok;
            detail += "subtree-triples=" + std::to_string(triples) +
                      (helly_ok ? " all-consistent" : " inconsistent");
        }
        return {ok, detail};
    });

    return report;
}

inline void write_suite_report(const SuiteReport& report, std::ostream& body,
                               std::ostream& timings) {
    for (const SuiteCheck& c : report.checks) {
        bool good = c.pass && c.within_limit();
        body << (good ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail;
        if (c.pass && !c.within_limit()) body << " (over time limit)";
        body << "\n";
        timings << c.name << " " << c.seconds << "s";
        if (c.limit_seconds > 0) timings << " (limit " << c.limit_seconds << "s)";
        timings << "\n";
    }
    body << (report.all_pass() ? "all checks passed" : "some checks failed") << "\n";
}

} // namespace gridrig
