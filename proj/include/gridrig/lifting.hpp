#pragma once

// Machinery for lifting induced models of subdivided cliques out of the
// path-attached family and into the ordered supergraph.
//
// The input is an induced model of subdivide(K_s, 1) in build_g(n).graph.
// normalize_model reshapes it so that every subdivision branch set is a
// single vertex, no such singleton sits on an attachment vertex while its
// two path neighbors lie in the two incident branching sets, and every
// branch set is inclusion-wise minimal. intervals_of reads off, for each
// branching set, the stretches of attachment indices its path components
// cover; check_claims tests the three interval conditions that a lift
// relies on; lift_to_bprime then maps the model to branch sets inside
// build_bn_prime, giving a clique model there.

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridrig/constructions.hpp"
#include "gridrig/graph.hpp"
#include "gridrig/minor_search.hpp"

namespace gridrig {

struct SubdividedCliqueModel {
    int s = 0;          // clique size; pattern is subdivide(complete_graph(s), 1)
    MinorModel model;   // induced model in build_g(n).graph
};

inline Graph subdivided_clique(int s) {
    if (s < 2) throw std::invalid_argument("subdivided_clique: s must be >= 2");
    return subdivide(complete_graph(s), 1);
}

// Pattern vertex id of the subdivision vertex between branching vertices k
// and kp (1-based, k < kp): s plus the rank of the clique edge.
inline int sub_vertex(int s, int k, int kp) {
    if (k > kp) std::swap(k, kp);
    if (k < 1 || kp > s || k == kp)
        throw std::invalid_argument("sub_vertex: need 1 <= k < kp <= s");
    int a = k - 1, b = kp - 1;
    return s + a * s - a * (a + 1) / 2 + (b - a - 1);
}

// A maximal stretch of attachment indices covered by one path component of
// a branching set: lo..hi are the indices i with p_{path_j, i} in that
// component.
struct Interval {
    int owner_k = 0;  // 1-based branching index
    int path_j = 0;
    int lo = 0, hi = 0;
    bool operator==(const Interval&) const = default;
};

struct ClaimVerdict {
    bool holds = true;
    std::string witness;
};

struct ClaimReport {
    ClaimVerdict nested_interval;  // no interval contains another's
    ClaimVerdict two_cover;        // no interval inside the union of two others'
    ClaimVerdict triple;           // no third set meets an overlap's surroundings
    bool all_hold() const {
        return nested_interval.holds && two_cover.holds && triple.holds;
    }
};

struct NormalizeOutcome {
    bool ok = true;
    std::string obstruction;
    SubdividedCliqueModel model;  // last valid shape reached
};

struct LiftResult {
    std::vector<std::vector<VertexId>> core_sets;    // per branching vertex
    std::vector<std::vector<VertexId>> branch_sets;  // core plus absorbed connectors
    bool pairwise_disjoint = false;
    bool all_connected = false;
    bool pairwise_adjacent = false;
    VerifyResult verdict;  // clique model check in the ordered supergraph
};

namespace detail {

struct LiftContext {
    int s = 0;
    int base = 0;     // vertices of the underlying ordered family
    int n = 0;        // number of attachment paths
    int spacing = 0;  // attachment index i sits at path position spacing*i - 1
    std::vector<int> owner;  // host vertex -> pattern vertex, -1 if free
};

inline LiftContext make_lift_context(const SubdividedCliqueModel& m,
                                     const ConstructionBundle& gb) {
    if (m.s < 2) throw std::invalid_argument("lift: s must be >= 2");
    if (m.model.kind != ModelKind::Induced)
        throw std::invalid_argument("lift: model must be an induced model");
    if (gb.path_attach.empty())
        throw std::invalid_argument("lift: bundle has no attachment paths");
    const int expected = m.s + m.s * (m.s - 1) / 2;
    if ((int)m.model.assignment.size() != expected)
        throw std::invalid_argument("lift: model has " +
                                    std::to_string(m.model.assignment.size()) +
                                    " branch sets, expected " + std::to_string(expected));
    auto check = verify_model(subdivided_clique(m.s), gb.graph, m.model);
    if (!check.ok) throw std::invalid_argument("lift: model invalid: " + check.violation);

    LiftContext ctx;
    ctx.s = m.s;
    ctx.base = gb.base_vertex_count();
    ctx.n = gb.params.n;
    ctx.spacing = gb.graph.label(gb.attach(1, 1)).pos + 1;
    ctx.owner.assign(gb.graph.vertex_count(), -1);
    for (int p = 0; p < (int)m.model.assignment.size(); ++p)
        for (VertexId v : m.model.assignment[p]) ctx.owner[v] = p;
    return ctx;
}

inline bool is_attachment_pos(const LiftContext& ctx, int pos) {
    return (pos + 1) % ctx.spacing == 0;
}

inline std::string interval_str(const Interval& iv) {
    return "{" + std::to_string(iv.lo) +
           (iv.hi > iv.lo ? ".." + std::to_string(iv.hi) : "") + "} of X" +
           std::to_string(iv.owner_k) + " on P" + std::to_string(iv.path_j);
}

inline std::vector<Interval> intervals_of_set(const LiftContext& ctx,
                                              const ConstructionBundle& gb,
                                              const std::vector<VertexId>& set, int k) {
    std::vector<std::vector<int>> on_path(ctx.n + 1);
    for (VertexId v : set) {
        const VertexLabel& lab = gb.graph.label(v);
        if (lab.role == Role::Path) on_path[lab.path].push_back(lab.pos);
    }
    std::vector<Interval> out;
    for (int j = 1; j <= ctx.n; ++j) {
        auto& ps = on_path[j];
        std::sort(ps.begin(), ps.end());
        size_t a = 0;
        while (a < ps.size()) {
            size_t b = a;
            while (b + 1 < ps.size() && ps[b + 1] == ps[b] + 1) ++b;
            int lo = 0, hi = 0;
            for (size_t t = a; t <= b; ++t)
                if (is_attachment_pos(ctx, ps[t])) {
                    int i = (ps[t] + 1) / ctx.spacing;
                    if (lo == 0) lo = i;
                    hi = i;
                }
            if (lo != 0) out.push_back({k, j, lo, hi});
            a = b + 1;
        }
    }
    return out;
}

} // namespace detail

// Intervals of the k-th branching set (k is 1-based).
inline std::vector<Interval> intervals_of(const SubdividedCliqueModel& m,
                                          const ConstructionBundle& gb, int k) {
    auto ctx = detail::make_lift_context(m, gb);
    if (k < 1 || k > m.s) throw std::invalid_argument("intervals_of: k out of range");
    return detail::intervals_of_set(ctx, gb, m.model.assignment[k - 1], k);
}

inline ClaimReport check_claims(const SubdividedCliqueModel& m, const ConstructionBundle& gb) {
    auto ctx = detail::make_lift_context(m, gb);
    const int s = m.s;
    std::vector<std::vector<Interval>> ivs(s + 1);
    for (int k = 1; k <= s; ++k)
        ivs[k] = detail::intervals_of_set(ctx, gb, m.model.assignment[k - 1], k);

    ClaimReport report;
    auto fail = [](ClaimVerdict& v, const std::string& msg) {
        if (v.holds) {
            v.holds = false;
            v.witness = msg;
        }
    };
    auto in = [](const Interval& iv, int x) { return iv.lo <= x && x <= iv.hi; };

    // nested intervals, and branch-set vertices inside interval overlaps
    for (int k = 1; k <= s; ++k)
        for (int kp = k + 1; kp <= s; ++kp)
            for (const Interval& a : ivs[k])
                for (const Interval& b : ivs[kp]) {
                    if (b.lo <= a.lo && a.hi <= b.hi)
                        fail(report.nested_interval, "interval " + detail::interval_str(a) +
                                                         " lies inside " +
                                                         detail::interval_str(b));
                    else if (a.lo <= b.lo && b.hi <= a.hi)
                        fail(report.nested_interval, "interval " + detail::interval_str(b) +
                                                         " lies inside " +
                                                         detail::interval_str(a));
                    int lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                    int used = 0;
                    bool bad_owner = false;
                    int bad_i = 0;
                    for (int i = lo; i <= hi; ++i) {
                        int o = ctx.owner[gb.b(i)];
                        if (o < 0) continue;
                        ++used;
                        if (o != sub_vertex(s, k, kp)) {
                            bad_owner = true;
                            bad_i = i;
                        }
                    }
                    if (used > 1)
                        fail(report.nested_interval,
                             "overlap of " + detail::interval_str(a) + " and " +
                                 detail::interval_str(b) + " has " + std::to_string(used) +
                                 " ordered vertices in branch sets");
                    else if (bad_owner)
                        fail(report.nested_interval,
                             "b_" + std::to_string(bad_i) + " in the overlap of " +
                                 detail::interval_str(a) + " and " + detail::interval_str(b) +
                                 " belongs to a branch set other than their connector");
                }

    // an interval covered by two others (plus possibly their connector's
    // attachment index)
    for (int k = 1; k <= s; ++k)
        for (const Interval& a : ivs[k])
            for (int kp = 1; kp <= s; ++kp) {
                if (kp == k) continue;
                for (int kpp = kp + 1; kpp <= s; ++kpp) {
                    if (kpp == k) continue;
                    int extra = 0;  // attachment index of s_{kp,kpp}, if any
                    const auto& sset = m.model.assignment[sub_vertex(s, kp, kpp)];
                    if (sset.size() == 1) {
                        const VertexLabel& lab = gb.graph.label(sset[0]);
                        if (lab.role == Role::Path && detail::is_attachment_pos(ctx, lab.pos))
                            extra = (lab.pos + 1) / ctx.spacing;
                    }
                    for (const Interval& b : ivs[kp])
                        for (const Interval& c : ivs[kpp]) {
                            bool covered = true, covered_extra = true;
                            for (int i = a.lo; i <= a.hi; ++i) {
                                bool basic = in(b, i) || in(c, i);
                                covered = covered && basic;
                                covered_extra = covered_extra && (basic || i == extra);
                            }
                            if (covered)
                                fail(report.two_cover,
                                     "interval " + detail::interval_str(a) + " lies inside " +
                                         detail::interval_str(b) + " union " +
                                         detail::interval_str(c));
                            else if (extra != 0 && covered_extra)
                                fail(report.two_cover,
                                     "interval " + detail::interval_str(a) + " lies inside " +
                                         detail::interval_str(b) + " union " +
                                         detail::interval_str(c) + " union {" +
                                         std::to_string(extra) + "}");
                        }
                }
            }

    // a third branching set meeting the surroundings of an overlap
    const int base_count = (int)gb.order.size();
    for (int k = 1; k <= s; ++k)
        for (int kp = 1; kp <= s; ++kp) {
            if (kp == k) continue;
            for (const Interval& a : ivs[k])
                for (const Interval& b : ivs[kp]) {
                    if (a.lo >= b.lo || b.lo > a.hi) continue;  // need overlap, min(a) < min(b)
                    int lo = std::max(1, b.lo - 1);
                    int hi = std::min(base_count, a.hi + 1);
                    for (int kpp = 1; kpp <= s; ++kpp) {
                        if (kpp == k || kpp == kp) continue;
                        for (int i = lo; i <= hi; ++i) {
                            bool hit = ctx.owner[gb.b(i)] == kpp - 1;
                            for (int j = 1; j <= ctx.n && !hit; ++j)
                                hit = ctx.owner[gb.attach(j, i)] == kpp - 1;
                            if (hit)
                                fail(report.triple,
                                     "X" + std::to_string(kpp) + " meets index " +
                                         std::to_string(i) + " between overlapping " +
                                         detail::interval_str(a) + " and " +
                                         detail::interval_str(b));
                        }
                    }
                }
        }
    return report;
}

// ---------------------------------------------------------------------------

namespace detail {

inline bool model_valid(const SubdividedCliqueModel& m, const ConstructionBundle& gb) {
    return verify_model(subdivided_clique(m.s), gb.graph, m.model).ok;
}

inline void sort_model(SubdividedCliqueModel& m) {
    for (auto& set : m.model.assignment) std::sort(set.begin(), set.end());
}

// Shortest path between two vertex sets inside G[inside]; returns empty on
// failure. Deterministic: seeds and neighbors in ascending order.
inline std::vector<VertexId> path_between(const Graph& g, const std::vector<VertexId>& inside,
                                          const std::vector<char>& from,
                                          const std::vector<char>& to) {
    std::vector<char> member(g.vertex_count(), 0);
    for (VertexId v : inside) member[v] = 1;
    std::vector<int> parent(g.vertex_count(), -2);
    std::queue<int> q;
    std::vector<VertexId> seeds;
    for (VertexId v : inside)
        if (from[v]) seeds.push_back(v);
    std::sort(seeds.begin(), seeds.end());
    int goal = -1;
    for (VertexId v : seeds) {
        parent[v] = -1;
        if (to[v]) { goal = v; break; }
        q.push(v);
    }
    while (goal < 0 && !q.empty()) {
        int x = q.front();
        q.pop();
        for (VertexId y : g.neighbors(x)) {
            if (!member[y] || parent[y] != -2) continue;
            parent[y] = x;
            if (to[y]) { goal = y; break; }
            q.push(y);
        }
    }
    std::vector<VertexId> path;
    if (goal < 0) return path;
    for (int x = goal; x >= 0; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

inline std::vector<char> neighbor_flags(const Graph& g, const std::vector<VertexId>& set) {
    std::vector<char> out(g.vertex_count(), 0);
    for (VertexId v : set)
        for (VertexId w : g.neighbors(v)) out[w] = 1;
    return out;
}

} // namespace detail

// Resolves the model into the shape the lift needs: every subdivision
// branch set a singleton, singletons off the attachment vertices whenever
// both path neighbors lie in the incident branching sets, and all branch
// sets inclusion-wise minimal. Every step re-verifies the model; a step
// with no valid variant stops with ok=false and the obstruction named.
inline NormalizeOutcome normalize_model(const SubdividedCliqueModel& input,
                                        const ConstructionBundle& gb) {
    auto ctx = detail::make_lift_context(input, gb);  // validates
    NormalizeOutcome out;
    out.model = input;
    detail::sort_model(out.model);
    SubdividedCliqueModel& m = out.model;
    const int s = m.s;
    const Graph& host = gb.graph;

    auto obstruct = [&](const std::string& msg) {
        out.ok = false;
        out.obstruction = msg;
    };

    // shrink subdivision branch sets to singletons
    for (int k = 1; k <= s && out.ok; ++k)
        for (int kp = k + 1; kp <= s && out.ok; ++kp) {
            const int sv = sub_vertex(s, k, kp);
            if (m.model.assignment[sv].size() <= 1) continue;
            auto attempt = [&](int from_branch, int to_branch) {
                auto nf = detail::neighbor_flags(host, m.model.assignment[from_branch]);
                auto nt = detail::neighbor_flags(host, m.model.assignment[to_branch]);
                auto path = detail::path_between(host, m.model.assignment[sv], nf, nt);
                if (path.empty()) return false;
                SubdividedCliqueModel trial = m;
                auto& absorbing = trial.model.assignment[from_branch];
                absorbing.insert(absorbing.end(), path.begin(), path.end() - 1);
                std::sort(absorbing.begin(), absorbing.end());
                trial.model.assignment[sv] = {path.back()};
                if (!detail::model_valid(trial, gb)) return false;
                m = std::move(trial);
                return true;
            };
            if (!attempt(k - 1, kp - 1) && !attempt(kp - 1, k - 1))
                obstruct("cannot shrink the branch set of the connector of X" +
                         std::to_string(k) + " and X" + std::to_string(kp) + " to one vertex");
        }

    // slide singletons off attachment vertices
    bool changed = true;
    while (out.ok && changed) {
        changed = false;
        for (int k = 1; k <= s && out.ok; ++k)
            for (int kp = k + 1; kp <= s && out.ok; ++kp) {
                const int sv = sub_vertex(s, k, kp);
                const auto& sset = m.model.assignment[sv];
                if (sset.size() != 1) continue;
                VertexId w = sset[0];
                const VertexLabel& lab = host.label(w);
                if (lab.role != Role::Path || !detail::is_attachment_pos(ctx, lab.pos)) continue;
                VertexId before = -1, after = -1;
                for (VertexId x : host.neighbors(w)) {
                    const VertexLabel& xl = host.label(x);
                    if (xl.role != Role::Path || xl.path != lab.path) continue;
                    if (xl.pos == lab.pos - 1) before = x;
                    if (xl.pos == lab.pos + 1) after = x;
                }
                if (before < 0 || after < 0) continue;
                std::vector<int> owner(host.vertex_count(), -1);
                for (int p = 0; p < (int)m.model.assignment.size(); ++p)
                    for (VertexId v : m.model.assignment[p]) owner[v] = p;
                bool pair_ok = (owner[before] == k - 1 && owner[after] == kp - 1) ||
                               (owner[before] == kp - 1 && owner[after] == k - 1);
                if (!pair_ok) continue;
                auto attempt = [&](VertexId absorbed_side, VertexId extracted) {
                    SubdividedCliqueModel trial = m;
                    auto& grow = trial.model.assignment[owner[absorbed_side]];
                    grow.push_back(w);
                    std::sort(grow.begin(), grow.end());
                    auto& shrink = trial.model.assignment[owner[extracted]];
                    shrink.erase(std::remove(shrink.begin(), shrink.end(), extracted),
                                 shrink.end());
                    trial.model.assignment[sv] = {extracted};
                    if (!detail::model_valid(trial, gb)) return false;
                    m = std::move(trial);
                    return true;
                };
                if (attempt(before, after) || attempt(after, before)) {
                    changed = true;
                } else {
                    obstruct("cannot slide the connector of X" + std::to_string(k) + " and X" +
                             std::to_string(kp) + " off attachment vertex " + std::to_string(w));
                }
            }
    }

    // prune every branch set to an inclusion-wise minimal one
    changed = out.ok;
    while (changed) {
        changed = false;
        for (int p = 0; p < (int)m.model.assignment.size(); ++p) {
            auto& set = m.model.assignment[p];
            for (size_t idx = 0; idx < set.size() && set.size() > 1;) {
                VertexId v = set[idx];
                set.erase(set.begin() + idx);
                if (detail::model_valid(m, gb)) {
                    changed = true;
                } else {
                    set.insert(set.begin() + idx, v);
                    ++idx;
                }
            }
        }
    }
    return out;
}

// Builds the clique branch sets in build_bn_prime(params) from the model:
// each branching set keeps its ordered-graph part and claims b_i for every
// attachment index i it reaches first; remaining singleton connectors that
// already live in the ordered graph are absorbed by their smaller endpoint.
inline LiftResult lift_to_bprime(const SubdividedCliqueModel& m, const ConstructionBundle& gb) {
    auto ctx = detail::make_lift_context(m, gb);
    ConstructionBundle bp = build_bn_prime(gb.params.g, gb.params.n);
    if (bp.graph.vertex_count() != ctx.base)
        throw std::logic_error("lift_to_bprime: bundle does not match its base family");
    const int s = m.s;

    std::vector<int> first_claim(ctx.base + 1, 0);  // by attachment index, 0 = unclaimed
    for (int k = 1; k <= s; ++k)
        for (VertexId v : m.model.assignment[k - 1]) {
            const VertexLabel& lab = gb.graph.label(v);
            if (lab.role != Role::Path || !detail::is_attachment_pos(ctx, lab.pos)) continue;
            int i = (lab.pos + 1) / ctx.spacing;
            if (first_claim[i] == 0 || k < first_claim[i]) first_claim[i] = k;
        }

    LiftResult res;
    res.core_sets.assign(s, {});
    std::vector<char> in_core(ctx.base, 0);
    for (int k = 1; k <= s; ++k) {
        for (VertexId v : m.model.assignment[k - 1])
            if (v < ctx.base) res.core_sets[k - 1].push_back(v);
        for (int i = 1; i <= ctx.base; ++i)
            if (first_claim[i] == k) res.core_sets[k - 1].push_back(gb.b(i));
        std::sort(res.core_sets[k - 1].begin(), res.core_sets[k - 1].end());
        res.core_sets[k - 1].erase(
            std::unique(res.core_sets[k - 1].begin(), res.core_sets[k - 1].end()),
            res.core_sets[k - 1].end());
        for (VertexId v : res.core_sets[k - 1]) in_core[v] = 1;
    }

    res.branch_sets = res.core_sets;
    for (int k = 1; k <= s; ++k)
        for (int kp = k + 1; kp <= s; ++kp) {
            const auto& sset = m.model.assignment[sub_vertex(s, k, kp)];
            if (sset.size() != 1) continue;
            VertexId w = sset[0];
            if (w < ctx.base && !in_core[w]) {
                res.branch_sets[k - 1].push_back(w);
                in_core[w] = 1;
            }
        }
    for (auto& set : res.branch_sets) std::sort(set.begin(), set.end());

    res.pairwise_disjoint = true;
    {
        std::vector<int> owner(ctx.base, -1);
        for (int k = 0; k < s && res.pairwise_disjoint; ++k)
            for (VertexId v : res.branch_sets[k]) {
                if (owner[v] >= 0) {
                    res.pairwise_disjoint = false;
                    break;
                }
                owner[v] = k;
            }
    }
    res.all_connected = true;
    for (int k = 0; k < s; ++k) {
        const auto& set = res.branch_sets[k];
        if (set.empty()) {
            res.all_connected = false;
            continue;
        }
        std::vector<char> member(ctx.base, 0), seen(ctx.base, 0);
        for (VertexId v : set) member[v] = 1;
        std::vector<VertexId> stack{set[0]};
        seen[set[0]] = 1;
        size_t reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : bp.graph.neighbors(v))
                if (member[w] && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != set.size()) res.all_connected = false;
    }
    res.pairwise_adjacent = true;
    for (int a = 0; a < s && res.pairwise_adjacent; ++a)
        for (int b = a + 1; b < s && res.pairwise_adjacent; ++b) {
            bool touch = false;
            for (VertexId u : res.branch_sets[a]) {
                for (VertexId v : res.branch_sets[b])
                    if (bp.graph.has_edge(u, v)) {
                        touch = true;
                        break;
                    }
                if (touch) break;
            }
            if (!touch) res.pairwise_adjacent = false;
        }

    MinorModel clique_model;
    clique_model.kind = ModelKind::Ordinary;
    clique_model.assignment = res.branch_sets;
    res.verdict = verify_model(complete_graph(s), bp.graph, clique_model);
    return res;
}

} // namespace gridrig
