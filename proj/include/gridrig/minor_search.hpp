#pragma once

// Exact minor and induced-minor testing.
//
// A model of a pattern P in a host H assigns to every pattern vertex a
// non-empty connected set of host vertices (its branch set); branch sets are
// pairwise disjoint, branch sets of adjacent pattern vertices are joined by
// at least one host edge, and for induced models branch sets of non-adjacent
// pattern vertices are joined by none.
//
// find_model runs a deterministic backtracking search: pattern vertices are
// placed in degree-descending order, and the branch set candidates for each
// placement are the connected subsets of the still-eligible host vertices,
// enumerated anchored at their minimum vertex in ascending order. Found
// witnesses are re-verified before being returned; Absent is only reported
// after exhausting the search space; Unknown is only returned when the node
// budget runs out.

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gridrig/bitset.hpp"
#include "gridrig/graph.hpp"

namespace gridrig {

enum class ModelKind { Ordinary, Induced };
enum class Outcome { Found, Absent, Unknown };

struct MinorModel {
    ModelKind kind = ModelKind::Ordinary;
    std::vector<std::vector<VertexId>> assignment;  // branch set per pattern vertex

    bool operator==(const MinorModel& o) const {
        return kind == o.kind && assignment == o.assignment;
    }
};

struct VerifyResult {
    bool ok = true;
    std::string violation;
};

struct SearchOptions {
    long long budget = -1;  // max search nodes, -1 = unlimited
    int jobs = 1;
};

struct SearchOutcome {
    Outcome outcome = Outcome::Absent;
    std::optional<MinorModel> model;
    long long nodes_used = 0;
};

struct EnumerationResult {
    std::vector<MinorModel> models;
    bool complete = true;
    long long nodes_used = 0;
};

// ---------------------------------------------------------------------------

inline VerifyResult verify_model(const Graph& pattern, const Graph& host, const MinorModel& m) {
    const int P = pattern.vertex_count();
    const int H = host.vertex_count();
    if ((int)m.assignment.size() != P)
        return {false, "domain: expected " + std::to_string(P) + " branch sets, got " +
                           std::to_string(m.assignment.size())};
    std::vector<int> owner(H, -1);
    for (int k = 0; k < P; ++k) {
        const auto& set = m.assignment[k];
        if (set.empty()) return {false, "domain: branch set " + std::to_string(k) + " is empty"};
        for (VertexId v : set) {
            if (v < 0 || v >= H)
                return {false, "domain: branch set " + std::to_string(k) +
                                   " contains invalid vertex " + std::to_string(v)};
            if (owner[v] == k)
                return {false, "domain: branch set " + std::to_string(k) + " lists vertex " +
                                   std::to_string(v) + " twice"};
            if (owner[v] >= 0)
                return {false, "disjointness: branch sets " + std::to_string(owner[v]) + " and " +
                                   std::to_string(k) + " share vertex " + std::to_string(v)};
            owner[v] = k;
        }
    }
    for (int k = 0; k < P; ++k) {
        const auto& set = m.assignment[k];
        Bitset in(H), seen(H);
        for (VertexId v : set) in.set(v);
        std::vector<VertexId> stack{set[0]};
        seen.set(set[0]);
        int reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : host.neighbors(v))
                if (in.test(w) && !seen.test(w)) {
                    seen.set(w);
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != (int)set.size())
            return {false, "connectivity: branch set " + std::to_string(k) + " is not connected"};
    }
    std::vector<Bitset> nbr(P, Bitset(H));
    for (int k = 0; k < P; ++k)
        for (VertexId v : m.assignment[k])
            for (VertexId w : host.neighbors(v)) nbr[k].set(w);
    auto touches = [&](int a, int b) {
        for (VertexId v : m.assignment[b])
            if (nbr[a].test(v)) return true;
        return false;
    };
    for (auto [u, v] : pattern.edges())
        if (!touches(u, v))
            return {false, "adjacency: pattern edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ") has non-adjacent branch sets"};
    if (m.kind == ModelKind::Induced)
        for (int u = 0; u < P; ++u)
            for (int v = u + 1; v < P; ++v)
                if (!pattern.has_edge(u, v) && touches(u, v))
                    return {false, "non-edge adjacency: pattern non-edge (" + std::to_string(u) +
                                       "," + std::to_string(v) + ") has adjacent branch sets"};
    return {true, ""};
}

// ---------------------------------------------------------------------------

namespace detail {

struct BudgetExhausted {};
struct SearchStopped {};

// Edge-partition blocks of g (2-connected components plus bridge edges),
// as sorted vertex sets. Isolated vertices yield no block.
inline std::vector<std::vector<VertexId>> biconnected_blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), it(n, 0);
    std::vector<std::pair<VertexId, VertexId>> estack;
    std::vector<std::vector<VertexId>> blocks;
    int timer = 0;
    auto pop_block = [&](VertexId u, VertexId w) {
        std::vector<VertexId> verts;
        Bitset seen(n);
        while (!estack.empty()) {
            auto [a, b] = estack.back();
            estack.pop_back();
            if (!seen.test(a)) { seen.set(a); verts.push_back(a); }
            if (!seen.test(b)) { seen.set(b); verts.push_back(b); }
            if (a == u && b == w) break;
        }
        std::sort(verts.begin(), verts.end());
        blocks.push_back(std::move(verts));
    };
    for (VertexId root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<VertexId> stack{root};
        num[root] = low[root] = timer++;
        while (!stack.empty()) {
            VertexId v = stack.back();
            auto nb = g.neighbors(v);
            if (it[v] < (int)nb.size()) {
                VertexId w = nb[it[v]++];
                if (num[w] < 0) {
                    parent[w] = v;
                    num[w] = low[w] = timer++;
                    estack.push_back({v, w});
                    stack.push_back(w);
                } else if (w != parent[v] && num[w] < num[v]) {
                    estack.push_back({v, w});
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId p = stack.back();
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) pop_block(p, v);
                }
            }
        }
    }
    return blocks;
}

inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !g.is_connected()) return false;
    return biconnected_blocks(g).size() == 1;
}

// Backtracking core over one host. Pattern vertices are placed level by
// level; level t's branch set is drawn from the eligible region (unused
// vertices, minus neighborhoods of placed non-neighbors for induced models)
// and must touch the neighborhood of every placed pattern-neighbor.
class ModelSearch {
public:
    // on_model gets the placed branch sets by level plus the level->pattern
    // map; it returns true to stop the whole search.
    using Sink = std::function<bool(const std::vector<Bitset>&, const std::vector<int>&)>;

    ModelSearch(const Graph& pattern, const Graph& host, ModelKind kind, long long budget,
                std::atomic<long long>& nodes, std::atomic<bool>& stop, int node_batch = 1)
        : p_(pattern),
          h_(host),
          kind_(kind),
          budget_(budget),
          nodes_(nodes),
          stop_(stop),
          batch_(node_batch),
          P_(pattern.vertex_count()),
          H_(host.vertex_count()),
          hostN_(host.neighborhood_masks()) {
        order_.resize(P_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return pattern.degree(a) > pattern.degree(b);
        });
        nbr_levels_.resize(P_);
        nonnbr_levels_.resize(P_);
        for (int t = 0; t < P_; ++t)
            for (int s = 0; s < t; ++s)
                (p_.has_edge(order_[t], order_[s]) ? nbr_levels_[t] : nonnbr_levels_[t])
                    .push_back(s);
        pending_after_.assign(P_, std::vector<int>(P_ + 1, 0));
        for (int q = 0; q < P_; ++q)
            for (int t = P_ - 1; t >= 0; --t)
                pending_after_[q][t] = pending_after_[q][t + 1] +
                                       (t > q && p_.has_edge(order_[q], order_[t]) ? 1 : 0);
        complete_ = p_.edge_count() == P_ * (P_ - 1) / 2;

        full_ = Bitset(H_);
        for (int v = 0; v < H_; ++v) full_.set(v);
        used_ = Bitset(H_);
        placed_.assign(P_, Bitset(H_));
        set_nbr_.assign(P_, Bitset(H_));
        regions_.assign(P_, Bitset(H_));
        banned_level_.assign(P_, Bitset(H_));
        frontiers_.assign(P_, std::vector<Bitset>(P_, Bitset(H_)));
        frontier_count_.assign(P_, 0);
        caps_.assign(P_, 0);
        anchors_.assign(P_, -1);
        const int depth = P_ + H_ + 4;
        frames_.resize(depth);
        for (auto& f : frames_) {
            f.set = Bitset(H_);
            f.cand = Bitset(H_);
            f.banned = Bitset(H_);
            f.tmp = Bitset(H_);
        }
        comp_scratch_ = Bitset(H_);
        comp_rest_ = Bitset(H_);
        comps_.assign(H_ > 0 ? H_ : 1, Bitset(H_));
    }

    // use_symmetry breaks the branch-set interchange symmetry of complete
    // patterns (existence queries only: it hides models, never existence).
    // Level-0 anchors can be strided across parallel workers.
    void run(const Sink& sink, bool use_symmetry, int stride = 1, int offset = 0) {
        sink_ = &sink;
        symmetric_ = use_symmetry && complete_ && P_ >= 2;
        stride_ = stride;
        offset_ = offset;
        if (P_ > H_ || p_.edge_count() > h_.edge_count()) return;
        try {
            place_level(0, 0);
        } catch (...) {
            nodes_.fetch_add(local_);
            local_ = 0;
            throw;
        }
        nodes_.fetch_add(local_);
        local_ = 0;
    }

private:
    struct Frame {
        Bitset set, cand, banned, tmp;
    };

    void bump() {
        if (++local_ < batch_) return;
        long long total = nodes_.fetch_add(local_, std::memory_order_relaxed) + local_;
        local_ = 0;
        if (budget_ >= 0 && total >= budget_) throw BudgetExhausted{};
        if (stop_.load(std::memory_order_relaxed)) throw SearchStopped{};
    }

    bool hits_frontiers(int t, const Bitset& s) const {
        for (int i = 0; i < frontier_count_[t]; ++i)
            if (!frontiers_[t][i].intersects(s)) return false;
        return true;
    }

    void collect_component(int seed, const Bitset& mask, Bitset& out) {
        out.clear();
        out.set(seed);
        comp_stack_.clear();
        comp_stack_.push_back(seed);
        while (!comp_stack_.empty()) {
            int v = comp_stack_.back();
            comp_stack_.pop_back();
            comp_scratch_ = hostN_[v];
            comp_scratch_ &= mask;
            comp_scratch_.subtract(out);
            for (int w = comp_scratch_.next(0); w >= 0; w = comp_scratch_.next(w + 1)) {
                out.set(w);
                comp_stack_.push_back(w);
            }
        }
    }

    // Feasibility of the not-yet-placed levels against the free region's
    // components: every future level with placed pattern-neighbors needs one
    // component meeting all of their neighborhoods.
    bool future_levels_feasible(int t) {
        comp_rest_ = full_;
        comp_rest_.subtract(used_);
        int ncomps = 0;
        while (true) {
            int seed = comp_rest_.next(0);
            if (seed < 0) break;
            collect_component(seed, comp_rest_, comps_[ncomps]);
            comp_rest_.subtract(comps_[ncomps]);
            ++ncomps;
        }
        for (int tf = t; tf < P_; ++tf) {
            bool constrained = false;
            for (int q : nbr_levels_[tf])
                if (q < t) { constrained = true; break; }
            if (!constrained) continue;
            bool ok = false;
            for (int c = 0; c < ncomps && !ok; ++c) {
                bool all = true;
                for (int q : nbr_levels_[tf]) {
                    if (q >= t) continue;
                    if (!comps_[c].intersects(set_nbr_[q])) { all = false; break; }
                }
                ok = all;
            }
            if (!ok) return false;
        }
        return true;
    }

    bool place_level(int t, int d) {
        bump();
        if (t == P_) return (*sink_)(placed_, order_);
        const int remaining = P_ - t;
        const int free_count = H_ - used_.count();
        if (free_count < remaining) return false;

        Bitset& region = regions_[t];
        region = full_;
        region.subtract(used_);
        for (int q = 0; q < t; ++q) {
            int pending = pending_after_[q][t];
            if (pending > 0) {
                frames_[d].tmp = set_nbr_[q];
                frames_[d].tmp &= region;
                if (frames_[d].tmp.count() < pending) return false;
            }
        }
        if (kind_ == ModelKind::Induced)
            for (int q : nonnbr_levels_[t]) region.subtract(set_nbr_[q]);

        frontier_count_[t] = 0;
        for (int q : nbr_levels_[t]) {
            Bitset& f = frontiers_[t][frontier_count_[t]];
            f = set_nbr_[q];
            f &= region;
            if (f.none()) return false;
            ++frontier_count_[t];
        }
        if (t >= 1 && remaining >= 2 && !future_levels_feasible(t)) return false;

        caps_[t] = free_count - (remaining - 1);
        Bitset& banned = banned_level_[t];
        banned.clear();
        int rank = 0;
        for (int a = region.next(0); a >= 0; a = region.next(a + 1)) {
            if (t == 0 && stride_ > 1 && rank++ % stride_ != offset_) continue;
            if (symmetric_ && t > 0 && a <= anchors_[t - 1]) {
                banned.set(a);
                continue;
            }
            anchors_[t] = a;
            Frame& f = frames_[d];
            f.set.clear();
            f.set.set(a);
            f.cand = hostN_[a];
            f.cand &= region;
            f.cand.subtract(banned);
            f.cand.reset(a);
            f.banned = banned;
            if (grow(t, d)) return true;
            banned.set(a);
        }
        return false;
    }

    bool grow(int t, int d) {
        bump();
        Frame& f = frames_[d];
        if (hits_frontiers(t, f.set)) {
            placed_[t] = f.set;
            used_ |= f.set;
            Bitset& sn = set_nbr_[t];
            sn.clear();
            for (int v = f.set.next(0); v >= 0; v = f.set.next(v + 1)) sn |= hostN_[v];
            bool found = place_level(t + 1, d + 1);
            used_.subtract(f.set);
            if (found) return true;
        }
        if (f.set.count() >= caps_[t]) return false;
        while (f.cand.any()) {
            int x = f.cand.next(0);
            f.cand.reset(x);
            Frame& g = frames_[d + 1];
            g.set = f.set;
            g.set.set(x);
            g.tmp = hostN_[x];
            g.tmp &= regions_[t];
            g.tmp.subtract(g.set);
            g.tmp.subtract(f.banned);
            g.cand = f.cand;
            g.cand |= g.tmp;
            g.banned = f.banned;
            if (grow(t, d + 1)) return true;
            f.banned.set(x);
        }
        return false;
    }

    const Graph& p_;
    const Graph& h_;
    ModelKind kind_;
    long long budget_;
    std::atomic<long long>& nodes_;
    std::atomic<bool>& stop_;
    int batch_;
    long long local_ = 0;
    int P_, H_;
    std::vector<Bitset> hostN_;
    std::vector<int> order_;
    std::vector<std::vector<int>> nbr_levels_, nonnbr_levels_;
    std::vector<std::vector<int>> pending_after_;
    bool complete_ = false, symmetric_ = false;
    int stride_ = 1, offset_ = 0;
    const Sink* sink_ = nullptr;

    Bitset full_, used_;
    std::vector<Bitset> placed_, set_nbr_, regions_, banned_level_;
    std::vector<std::vector<Bitset>> frontiers_;
    std::vector<int> frontier_count_, caps_, anchors_;
    std::vector<Frame> frames_;
    Bitset comp_scratch_, comp_rest_;
    std::vector<Bitset> comps_;
    std::vector<int> comp_stack_;
};

inline MinorModel assemble_model(ModelKind kind, const std::vector<Bitset>& placed,
                                 const std::vector<int>& order) {
    MinorModel m;
    m.kind = kind;
    m.assignment.resize(order.size());
    for (size_t t = 0; t < order.size(); ++t) m.assignment[order[t]] = placed[t].to_vector();
    return m;
}

inline void translate_model(MinorModel& m, const std::vector<VertexId>& to_global) {
    for (auto& set : m.assignment)
        for (auto& v : set) v = to_global[v];
}

// Existence search with component and block decomposition. A connected
// pattern fits inside one host component; a 2-connected pattern can always
// be confined to one block (trimming a model at a cut vertex keeps it
// valid, for induced models too, since blocks are induced subgraphs).
inline std::optional<MinorModel> existence_search(const Graph& pattern, const Graph& host,
                                                  ModelKind kind, const SearchOptions& opt,
                                                  std::atomic<long long>& nodes,
                                                  bool allow_split) {
    const int P = pattern.vertex_count();
    if (P > host.vertex_count() || pattern.edge_count() > host.edge_count()) return std::nullopt;

    if (allow_split) {
        std::vector<std::vector<VertexId>> parts;
        if (pattern.is_connected() && host.component_count() > 1) {
            auto comp = host.component_ids();
            parts.resize(host.component_count());
            for (VertexId v = 0; v < host.vertex_count(); ++v) parts[comp[v]].push_back(v);
        } else if (is_two_connected(pattern)) {
            parts = biconnected_blocks(host);
            std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() > b.size();
                return a < b;
            });
            if (parts.size() <= 1) parts.clear();
        }
        if (!parts.empty() && !(parts.size() == 1 && (int)parts[0].size() == host.vertex_count())) {
            for (const auto& verts : parts) {
                if ((int)verts.size() < P) continue;
                Graph sub = induced_subgraph(host, verts);
                auto m = existence_search(pattern, sub, kind, opt, nodes, true);
                if (m) {
                    translate_model(*m, verts);
                    return m;
                }
            }
            return std::nullopt;
        }
    }

    std::atomic<bool> stop{false};
    const int jobs = std::min(opt.jobs, std::max(1, host.vertex_count()));
    if (jobs <= 1) {
        std::optional<MinorModel> result;
        ModelSearch::Sink sink = [&](const std::vector<Bitset>& placed,
                                     const std::vector<int>& order) {
            result = assemble_model(kind, placed, order);
            return true;
        };
        ModelSearch search(pattern, host, kind, opt.budget, nodes, stop, 1);
        search.run(sink, true);
        return result;
    }

    std::mutex mtx;
    std::optional<MinorModel> result;
    std::atomic<bool> exhausted{false};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            ModelSearch::Sink sink = [&](const std::vector<Bitset>& placed,
                                         const std::vector<int>& order) {
                std::lock_guard<std::mutex> lk(mtx);
                MinorModel m = assemble_model(kind, placed, order);
                if (!result || m.assignment < result->assignment) result = std::move(m);
                stop.store(true);
                return true;
            };
            try {
                ModelSearch search(pattern, host, kind, opt.budget, nodes, stop, 64);
                search.run(sink, true, jobs, w);
            } catch (const BudgetExhausted&) {
                exhausted.store(true);
                stop.store(true);
            } catch (const SearchStopped&) {
            }
        });
    }
    for (auto& th : workers) th.join();
    if (result) return result;
    if (exhausted.load()) throw BudgetExhausted{};
    return std::nullopt;
}

} // namespace detail

// ---------------------------------------------------------------------------

inline SearchOutcome find_model(const Graph& pattern, const Graph& host, ModelKind kind,
                                const SearchOptions& opt = {}) {
    if (pattern.vertex_count() == 0 || host.vertex_count() == 0)
        throw std::invalid_argument("find_model: pattern and host must be non-empty");
    if (opt.jobs < 1) throw std::invalid_argument("find_model: jobs must be >= 1");
    std::atomic<long long> nodes{0};
    SearchOutcome out;
    try {
        auto m = detail::existence_search(pattern, host, kind, opt, nodes, true);
        out.outcome = m ? Outcome::Found : Outcome::Absent;
        out.model = std::move(m);
    } catch (const detail::BudgetExhausted&) {
        out.outcome = Outcome::Unknown;
    }
    out.nodes_used = nodes.load();
    if (out.outcome == Outcome::Found) {
        auto check = verify_model(pattern, host, *out.model);
        if (!check.ok)
            throw std::logic_error("find_model: witness failed verification: " + check.violation);
    }
    return out;
}

// Enumerates every model, each exactly once, in the deterministic search
// order. Runs single-threaded; stops early (complete=false) when max_models
// or the node budget is reached.
inline EnumerationResult enumerate_models(const Graph& pattern, const Graph& host, ModelKind kind,
                                          const SearchOptions& opt = {},
                                          size_t max_models = SIZE_MAX) {
    if (pattern.vertex_count() == 0 || host.vertex_count() == 0)
        throw std::invalid_argument("enumerate_models: pattern and host must be non-empty");
    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};
    EnumerationResult res;

    std::vector<std::vector<VertexId>> parts;
    if (pattern.is_connected() && host.component_count() > 1) {
        auto comp = host.component_ids();
        parts.resize(host.component_count());
        for (VertexId v = 0; v < host.vertex_count(); ++v) parts[comp[v]].push_back(v);
    } else {
        parts.push_back({});
        parts[0].resize(host.vertex_count());
        std::iota(parts[0].begin(), parts[0].end(), 0);
    }

    try {
        for (const auto& verts : parts) {
            if ((int)verts.size() < pattern.vertex_count()) continue;
            Graph sub = induced_subgraph(host, verts);
            bool truncated = false;
            detail::ModelSearch::Sink sink = [&](const std::vector<Bitset>& placed,
                                                 const std::vector<int>& order) {
                MinorModel m = detail::assemble_model(kind, placed, order);
                detail::translate_model(m, verts);
                res.models.push_back(std::move(m));
                if (res.models.size() >= max_models) {
                    truncated = true;
                    return true;
                }
                return false;
            };
            detail::ModelSearch search(pattern, sub, kind, opt.budget, nodes, stop, 1);
            search.run(sink, false);
            if (truncated) {
                res.complete = false;
                break;
            }
        }
    } catch (const detail::BudgetExhausted&) {
        res.complete = false;
    }
    res.nodes_used = nodes.load();
    return res;
}

// ---------------------------------------------------------------------------

namespace detail {

// Checks both kinds in one sweep over all (s+1)^n branch-set assignments.
inline std::pair<bool, bool> brute_force_both(const Graph& pattern, const Graph& host) {
    const int P = pattern.vertex_count();
    const int H = host.vertex_count();
    if (H > 10)
        throw std::invalid_argument("brute_force_contains: host must have at most 10 vertices");
    if (P == 0 || H == 0)
        throw std::invalid_argument("brute_force_contains: pattern and host must be non-empty");
    std::vector<uint32_t> hostN(H, 0);
    for (VertexId v = 0; v < H; ++v)
        for (VertexId w : host.neighbors(v)) hostN[v] |= uint32_t{1} << w;
    std::vector<std::pair<int, int>> pedges = pattern.edges();
    std::vector<std::pair<int, int>> pnonedges;
    for (int u = 0; u < P; ++u)
        for (int v = u + 1; v < P; ++v)
            if (!pattern.has_edge(u, v)) pnonedges.push_back({u, v});

    auto connected = [&](uint32_t mask) {
        int first = __builtin_ctz(mask);
        uint32_t reach = uint32_t{1} << first;
        while (true) {
            uint32_t grow = reach;
            for (uint32_t m = reach; m; m &= m - 1) grow |= hostN[__builtin_ctz(m)];
            grow &= mask;
            if (grow == reach) break;
            reach = grow;
        }
        return reach == mask;
    };

    bool ordinary = false, induced = false;
    std::vector<int> digit(H, 0);
    std::vector<uint32_t> part(P + 1, 0);
    std::vector<uint32_t> pnbr(P + 1, 0);
    while (true) {
        part.assign(P + 1, 0);
        for (int v = 0; v < H; ++v) part[digit[v]] |= uint32_t{1} << v;
        bool valid = true;
        for (int k = 1; k <= P && valid; ++k) valid = part[k] != 0 && connected(part[k]);
        if (valid) {
            pnbr.assign(P + 1, 0);
            for (int k = 1; k <= P; ++k)
                for (uint32_t m = part[k]; m; m &= m - 1) pnbr[k] |= hostN[__builtin_ctz(m)];
            bool edges_ok = true;
            for (auto [u, v] : pedges)
                if (!(pnbr[u + 1] & part[v + 1])) { edges_ok = false; break; }
            if (edges_ok) {
                ordinary = true;
                bool nonedges_ok = true;
                for (auto [u, v] : pnonedges)
                    if (pnbr[u + 1] & part[v + 1]) { nonedges_ok = false; break; }
                if (nonedges_ok) induced = true;
            }
            if (ordinary && induced) return {true, true};
        }
        int i = 0;
        while (i < H && digit[i] == P) digit[i++] = 0;
        if (i == H) break;
        ++digit[i];
    }
    return {ordinary, induced};
}

// Model count per kind, comparable with enumerate_models.
inline long long brute_force_count(const Graph& pattern, const Graph& host, ModelKind kind) {
    const int P = pattern.vertex_count();
    const int H = host.vertex_count();
    if (H > 10)
        throw std::invalid_argument("brute_force_count: host must have at most 10 vertices");
    long long count = 0;
    std::vector<int> digit(H, 0);
    MinorModel m;
    m.kind = kind;
    while (true) {
        m.assignment.assign(P, {});
        for (int v = 0; v < H; ++v)
            if (digit[v] > 0) m.assignment[digit[v] - 1].push_back(v);
        bool skip = false;
        for (auto& s : m.assignment)
            if (s.empty()) { skip = true; break; }
        if (!skip && verify_model(pattern, host, m).ok) ++count;
        int i = 0;
        while (i < H && digit[i] == P) digit[i++] = 0;
        if (i == H) break;
        ++digit[i];
    }
    return count;
}

} // namespace detail

inline bool brute_force_contains(const Graph& pattern, const Graph& host, ModelKind kind) {
    auto [ordinary, induced] = detail::brute_force_both(pattern, host);
    return kind == ModelKind::Ordinary ? ordinary : induced;
}

} // namespace gridrig
