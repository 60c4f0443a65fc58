#ifndef MFDS_DECOMPOSE_HPP
#define MFDS_DECOMPOSE_HPP

#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <thread>
#include <vector>

#include "mfds/density.hpp"
#include "mfds/graph.hpp"
#include "mfds/heuristic.hpp"
#include "mfds/ordering.hpp"
#include "mfds/search.hpp"
#include "mfds/solution.hpp"

namespace mfds {

/// One decomposition unit: the anchor v_i together with its later-ranked
/// two-hop neighbors, as an induced local graph.
struct Subproblem {
    int anchor_global = -1;
    int anchor_local = -1;
    Graph local_graph;
    std::vector<int> to_global;
};

namespace detail {

/// V_i: the anchor plus every later-ranked vertex within distance 2 of it in
/// the suffix subgraph G[{v_i, v_{i+1}, ...}]. The suffix restriction matters
/// for the Theorem 1/2 size guarantees: any candidate optimum whose earliest
/// member is v_i connects through middles inside itself, hence later-ranked,
/// so nothing is lost by ignoring 2-paths through earlier vertices.
inline VertexSet subproblem_vertices(const Graph& g, const Ordering& ord, int i) {
    int anchor = ord.perm[i];
    VertexSet vi(g.n());
    vi.add(anchor);
    for (int w : g.neighbors(anchor)) {
        if (ord.rank[w] <= i) continue;
        vi.add(w);
        for (int x : g.neighbors(w))
            if (ord.rank[x] > i) vi.add(x);
    }
    return vi;
}

}  // namespace detail

inline Subproblem build_subproblem(const Graph& g, const Ordering& ord, int i) {
    int anchor = ord.perm[i];
    VertexSet vi = detail::subproblem_vertices(g, ord, i);
    Subproblem sub;
    sub.anchor_global = anchor;
    auto [local, to_global] = induced_subgraph(g, vi);
    sub.local_graph = std::move(local);
    sub.to_global = std::move(to_global);
    for (size_t j = 0; j < sub.to_global.size(); ++j)
        if (sub.to_global[j] == anchor) sub.anchor_local = static_cast<int>(j);
    assert(sub.anchor_local >= 0);
    return sub;
}

struct SolveOptions {
    OrderingKind order = OrderingKind::degeneracy;
    SearchOptions search;
    int threads = 1;
    std::optional<double> time_limit_seconds;
};

struct SolveResult {
    Solution best;
    bool complete = true;
    long long alpha = 0;          // max |V_i| over the decomposition
    long long ordering_stat = 0;  // d_G or td_G
    long long subproblems_skipped = 0;
    SearchStats stats;
    double heuristic_ms = 0, ordering_ms = 0, search_ms = 0, total_ms = 0;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// The decomposition framework: heuristic lower bound, vertex ordering,
/// then one anchored branch-and-bound per subproblem V_i. Subproblems share
/// the monotone (lb, best) incumbent; those no larger than the current lb
/// are skipped outright.
inline SolveResult solve(const Graph& g, const DensityFunction& df, const SolveOptions& options) {
    auto t_start = std::chrono::steady_clock::now();
    SolveResult result;
    df.validate(g.n());

    SearchOptions search_opt = options.search;
    if (options.time_limit_seconds && !search_opt.deadline)
        search_opt.deadline = t_start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                            std::chrono::duration<double>(*options.time_limit_seconds));

    SharedIncumbent incumbent;
    auto t0 = std::chrono::steady_clock::now();
    incumbent.seed(init_heuristic(g, df));
    result.heuristic_ms = detail::ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    Ordering ord;
    switch (options.order) {
        case OrderingKind::degeneracy: ord = degeneracy_order(g); break;
        case OrderingKind::two_hop_degeneracy: ord = two_hop_degeneracy_order(g); break;
        case OrderingKind::input: ord = input_order(g); break;
    }
    result.ordering_ms = detail::ms_since(t0);
    result.ordering_stat = ord.stat;

    t0 = std::chrono::steady_clock::now();
    std::atomic<long long> alpha{0};
    std::atomic<long long> skipped{0};
    std::atomic<int> next{0};
    std::mutex stats_mu;
    std::atomic<bool> deadline_hit{false};

    auto worker = [&]() {
        SearchStats local_stats;
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= g.n()) break;
            if (search_opt.deadline && std::chrono::steady_clock::now() > *search_opt.deadline) {
                deadline_hit.store(true);
                break;
            }
            int anchor = ord.perm[i];
            VertexSet vi = detail::subproblem_vertices(g, ord, i);
            long long size = vi.size();
            long long prev = alpha.load();
            while (size > prev && !alpha.compare_exchange_weak(prev, size)) {
            }
            if (size <= incumbent.lb()) {
                skipped.fetch_add(1);
                continue;
            }
            auto [local, to_global] = induced_subgraph(g, vi);
            int anchor_local = -1;
            for (size_t j = 0; j < to_global.size(); ++j)
                if (to_global[j] == anchor) anchor_local = static_cast<int>(j);
            VertexSet s0(local.n()), c0(local.n());
            s0.add(anchor_local);
            for (int v = 0; v < local.n(); ++v)
                if (v != anchor_local) c0.add(v);
            branch_bound(local, df, s0, c0, incumbent, search_opt, local_stats, &to_global);
            if (local_stats.deadline_hit) {
                deadline_hit.store(true);
                break;
            }
        }
        std::lock_guard lock(stats_mu);
        result.stats.merge(local_stats);
    };

    int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    result.search_ms = detail::ms_since(t0);

    result.alpha = alpha.load();
    result.subproblems_skipped = skipped.load();
    result.complete = !deadline_hit.load() && !result.stats.deadline_hit;
    result.best = incumbent.snapshot();
    result.total_ms = detail::ms_since(t_start);

    // Theorem guarantees on the decomposition width (+1 accounts for the
    // anchor, which the self-excluded N^(2) statistics do not count).
    if (result.complete && g.n() > 0) {
        bool ok = true;
        if (options.order == OrderingKind::degeneracy) {
            long long max_deg = 0;
            for (int v = 0; v < g.n(); ++v) max_deg = std::max<long long>(max_deg, g.degree(v));
            ok = result.alpha <= std::min<long long>(ord.stat * max_deg + 1, g.n());
        } else if (options.order == OrderingKind::two_hop_degeneracy) {
            ok = result.alpha <= ord.stat + 1;
        }
        if (!ok) throw std::logic_error("decomposition width exceeds its theorem bound");
    }
    return result;
}

/// Plain branch-and-bound on the whole graph (no decomposition), seeded by
/// the heuristic.
inline SolveResult solve_bnb_only(const Graph& g, const DensityFunction& df,
                                  const SolveOptions& options) {
    auto t_start = std::chrono::steady_clock::now();
    SolveResult result;
    df.validate(g.n());

    SearchOptions search_opt = options.search;
    if (options.time_limit_seconds && !search_opt.deadline)
        search_opt.deadline = t_start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                            std::chrono::duration<double>(*options.time_limit_seconds));

    SharedIncumbent incumbent;
    auto t0 = std::chrono::steady_clock::now();
    incumbent.seed(init_heuristic(g, df));
    result.heuristic_ms = detail::ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    VertexSet s0(g.n()), c0(g.n());
    for (int v = 0; v < g.n(); ++v) c0.add(v);
    branch_bound(g, df, s0, c0, incumbent, search_opt, result.stats);
    result.search_ms = detail::ms_since(t0);

    result.alpha = g.n();
    result.ordering_stat = 0;
    result.complete = !result.stats.deadline_hit;
    result.best = incumbent.snapshot();
    result.total_ms = detail::ms_since(t_start);
    return result;
}

}  // namespace mfds

#endif  // MFDS_DECOMPOSE_HPP
