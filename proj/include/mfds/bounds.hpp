#ifndef MFDS_BOUNDS_HPP
#define MFDS_BOUNDS_HPP

#include <algorithm>
#include <vector>

#include "mfds/density.hpp"
#include "mfds/graph.hpp"

namespace mfds {

/// State shared with the bounding algorithms: the growing set S, the
/// candidate set C, |complement-E(S)| and the per-candidate missing-edge
/// counts w_S(v) = |S \ N(v)| (indexed by vertex id, valid for members
/// of C). The search maintains these incrementally.
struct BoundContext {
    const VertexSet& S;
    const VertexSet& C;
    long long complement_edges_S = 0;
    const std::vector<int>& w_S;

    /// Recomputes complement_edges_S and w_S from scratch.
    static BoundContext make(const Graph& g, const VertexSet& s, const VertexSet& c,
                             long long& comp_storage, std::vector<int>& w_storage) {
        comp_storage = pairs_of(s.size()) - edge_count(g, s);
        w_storage.assign(g.n(), 0);
        c.for_each([&](int v) {
            int w = 0;
            s.for_each([&](int u) {
                if (!g.adjacent(u, v)) ++w;
            });
            w_storage[v] = w;
        });
        return BoundContext{s, c, comp_storage, w_storage};
    }
};

/// Shared final step of both bounds: given weights sorted non-decreasing,
/// the largest prefix length k with prefix_sum + comp_edges <= g_f(base + k).
///
/// `ascending` scans k upward, otherwise k is decremented from the full
/// length until the inequality holds. Both return the largest satisfying k:
/// g_f need not be monotone (quasi with gamma < 1 grows), so scans must not
/// stop at the first violation — a larger k can become feasible again.
inline long long prefix_k_select(const DensityFunction& df, long long base_size,
                                 long long comp_edges, const std::vector<long long>& sorted_weights,
                                 bool ascending) {
    long long total = static_cast<long long>(sorted_weights.size());
    if (ascending) {
        long long k = 0, sum = 0;
        for (long long j = 1; j <= total; ++j) {
            sum += sorted_weights[static_cast<size_t>(j - 1)];
            if (df.slack_within(sum + comp_edges, base_size + j)) k = j;
        }
        return k;
    }
    std::vector<long long> prefix(static_cast<size_t>(total) + 1, 0);
    for (long long j = 1; j <= total; ++j)
        prefix[static_cast<size_t>(j)] = prefix[static_cast<size_t>(j - 1)] + sorted_weights[static_cast<size_t>(j - 1)];
    long long k = total;
    while (k > 0 && !df.slack_within(prefix[static_cast<size_t>(k)] + comp_edges, base_size + k)) --k;
    return k;
}

/// Sorted bound: order C by w_S non-decreasing and take the longest prefix
/// whose accumulated missing edges still fit within g_f.
inline long long simple_bound(const Graph&, const DensityFunction& df, const BoundContext& ctx) {
    std::vector<std::pair<int, int>> order;  // (w, id)
    order.reserve(ctx.C.size());
    ctx.C.for_each([&](int v) { order.emplace_back(ctx.w_S[v], v); });
    std::sort(order.begin(), order.end());
    std::vector<long long> weights;
    weights.reserve(order.size());
    for (const auto& [w, v] : order) weights.push_back(w);
    return ctx.S.size() + prefix_k_select(df, ctx.S.size(), ctx.complement_edges_S, weights, true);
}

/// Disjoint independent subsets covering C.
struct IndependentPartition {
    std::vector<std::vector<int>> blocks;
    int chi() const { return static_cast<int>(blocks.size()); }
};

/// Repeated greedy maximal-independent-set extraction in ascending id order.
inline IndependentPartition greedy_independent_partition(const Graph& g, const VertexSet& c) {
    IndependentPartition part;
    std::vector<int> remaining = c.to_vector();
    while (!remaining.empty()) {
        std::vector<int> block, rest;
        for (int v : remaining) {
            bool independent = true;
            for (int u : block) {
                if (g.adjacent(u, v)) {
                    independent = false;
                    break;
                }
            }
            if (independent)
                block.push_back(v);
            else
                rest.push_back(v);
        }
        part.blocks.push_back(std::move(block));
        remaining = std::move(rest);
    }
    return part;
}

namespace detail {

/// Splits a block (already sorted by (w_S, id)) into sub-blocks R_1, R_2, ...
/// whose members are pairwise at distance > 2 within G[restriction], greedily
/// in the given order.
inline std::vector<std::vector<int>> refine_distance_blocks(const Graph& g,
                                                            const VertexSet& restriction,
                                                            std::vector<int> pending) {
    std::vector<std::vector<int>> subs;
    while (!pending.empty()) {
        std::vector<int> sub, rest;
        for (int v : pending) {
            bool far_from_all = true;
            for (int u : sub) {
                if (dist_leq_two(g, restriction, u, v)) {
                    far_from_all = false;
                    break;
                }
            }
            if (far_from_all)
                sub.push_back(v);
            else
                rest.push_back(v);
        }
        subs.push_back(std::move(sub));
        pending = std::move(rest);
    }
    return subs;
}

}  // namespace detail

/// SortBound: partition C into independent blocks, refine each block into
/// sub-blocks of pairwise distance > 2 within G[S u C] (at most one vertex
/// of such a sub-block fits in any diameter-2 solution), keep the cheapest
/// vertex per sub-block with weight w' = w_S + (sub-block index - 1), then
/// run the sorted prefix test on the adjusted weights.
inline long long sort_bound(const Graph& g, const DensityFunction& df, const BoundContext& ctx) {
    if (ctx.C.empty()) return ctx.S.size();
    VertexSet restriction = set_union(ctx.S, ctx.C);
    IndependentPartition part = greedy_independent_partition(g, ctx.C);

    std::vector<long long> adjusted;  // w' values of the selected C'
    for (auto& block : part.blocks) {
        std::sort(block.begin(), block.end(), [&](int a, int b) {
            return std::pair(ctx.w_S[a], a) < std::pair(ctx.w_S[b], b);
        });
        auto subs = detail::refine_distance_blocks(g, restriction, block);
        for (size_t sigma = 0; sigma < subs.size(); ++sigma) {
            // each sub-block is ordered by w_S, so its representative is the front
            adjusted.push_back(static_cast<long long>(ctx.w_S[subs[sigma].front()]) +
                               static_cast<long long>(sigma));
        }
    }
    std::sort(adjusted.begin(), adjusted.end());
    return ctx.S.size() + prefix_k_select(df, ctx.S.size(), ctx.complement_edges_S, adjusted, false);
}

}  // namespace mfds

#endif  // MFDS_BOUNDS_HPP
