#ifndef MFDS_ORACLE_HPP
#define MFDS_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mfds/density.hpp"
#include "mfds/graph.hpp"
#include "mfds/solution.hpp"

namespace mfds {

struct OracleResult {
    int optimum_size = 0;
    std::vector<int> witness;  // sorted; empty when optimum_size == 0
    long long subsets_checked = 0;
};

namespace detail {

/// Bitmask adjacency for the brute-force check. Kept deliberately separate
/// from the solver: feasibility here is popcounts over masks, nothing shared
/// with the branch-and-bound code paths.
struct MaskGraph {
    int n;
    std::vector<uint64_t> adj;

    explicit MaskGraph(const Graph& g) : n(g.n()), adj(static_cast<size_t>(g.n()), 0) {
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[static_cast<size_t>(v)] |= uint64_t{1} << w;
    }

    long long edges(uint64_t mask) const {
        long long twice = 0;
        for (uint64_t m = mask; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            twice += std::popcount(adj[static_cast<size_t>(v)] & mask);
        }
        return twice / 2;
    }

    bool diam_leq_two(uint64_t mask) const {
        for (uint64_t mi = mask; mi;) {
            int u = std::countr_zero(mi);
            mi &= mi - 1;
            for (uint64_t mj = mi; mj;) {
                int v = std::countr_zero(mj);
                mj &= mj - 1;
                uint64_t bu = adj[static_cast<size_t>(u)];
                if (!((bu >> v) & 1) && !(bu & adj[static_cast<size_t>(v)] & mask)) return false;
            }
        }
        return true;
    }
};

/// Next k-subset mask in colex order (Gosper's hack).
inline uint64_t next_subset(uint64_t x) {
    uint64_t c = x & (0 - x);
    uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

}  // namespace detail

/// Maximum feasible S* with required ⊆ S* ⊆ required ∪ optional, by plain
/// exhaustion over subsets of `optional` in decreasing size. Returns size 0
/// with an empty witness when nothing (including `required` itself) is
/// feasible.
inline OracleResult brute_force_restricted(const Graph& g, const DensityFunction& df,
                                           const VertexSet& required, const VertexSet& optional_set,
                                           int max_n = 20) {
    VertexSet uset = set_union(required, optional_set);
    int k = uset.size();
    if (k > max_n)
        throw std::invalid_argument("oracle: universe size " + std::to_string(k) +
                                    " exceeds limit " + std::to_string(max_n));
    df.validate(k);

    auto [local, to_parent] = induced_subgraph(g, uset);
    detail::MaskGraph mg(local);
    uint64_t base = 0;  // required vertices, in local ids
    for (int j = 0; j < k; ++j)
        if (required.contains(to_parent[static_cast<size_t>(j)])) base |= uint64_t{1} << j;
    std::vector<int> opt_ids;
    for (int j = 0; j < k; ++j)
        if (!(base >> j & 1)) opt_ids.push_back(j);
    int c = static_cast<int>(opt_ids.size());
    int s = k - c;

    auto spread = [&](uint64_t compact) {
        uint64_t mask = base;
        for (uint64_t m = compact; m;) {
            int bit = std::countr_zero(m);
            m &= m - 1;
            mask |= uint64_t{1} << opt_ids[static_cast<size_t>(bit)];
        }
        return mask;
    };

    OracleResult result;
    for (int take = c; take >= 0; --take) {
        if (s + take == 0) break;
        uint64_t compact = (take == 0) ? 0 : ((uint64_t{1} << take) - 1);
        uint64_t limit = (c == 0) ? 0 : ((uint64_t{1} << c) - 1);
        for (;;) {
            uint64_t mask = spread(compact);
            ++result.subsets_checked;
            if (df.edges_suffice(mg.edges(mask), s + take) && mg.diam_leq_two(mask)) {
                result.optimum_size = s + take;
                for (uint64_t m = mask; m;) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    result.witness.push_back(to_parent[static_cast<size_t>(v)]);
                }
                return result;
            }
            if (take == 0 || compact == (limit & ~((uint64_t{1} << (c - take)) - 1))) break;
            compact = detail::next_subset(compact);
        }
    }
    return result;
}

/// Exhaustive maximum search on the whole graph. Guarded to small n; use the
/// solver for anything real.
inline OracleResult brute_force(const Graph& g, const DensityFunction& df, int max_n = 20) {
    VertexSet none(g.n()), all(g.n());
    for (int v = 0; v < g.n(); ++v) all.add(v);
    return brute_force_restricted(g, df, none, all, max_n);
}

}  // namespace mfds

#endif  // MFDS_ORACLE_HPP
