#ifndef MFDS_ORDERING_HPP
#define MFDS_ORDERING_HPP

#include <numeric>
#include <queue>
#include <vector>

#include "mfds/graph.hpp"

namespace mfds {

enum class OrderingKind { degeneracy, two_hop_degeneracy, input };

/// A permutation of [0, n) with its achieved ordering statistic:
/// d_G for the degeneracy kind, td_G for the two-hop kind.
struct Ordering {
    std::vector<int> perm;
    std::vector<int> rank;  // rank[perm[i]] = i
    long long stat = 0;
    OrderingKind kind = OrderingKind::input;
};

/// Min-degree peel (Matula-Beck) with a linear bucket heap. The statistic
/// is the maximum remaining degree seen at removal time, i.e. d_G.
inline Ordering degeneracy_order(const Graph& g) {
    int n = g.n();
    Ordering ord;
    ord.kind = OrderingKind::degeneracy;
    ord.perm.resize(n);
    ord.rank.resize(n);
    if (n == 0) return ord;

    std::vector<int> deg(n);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    // vert sorted by degree via counting sort; pos/bin track bucket layout
    std::vector<int> bin(max_deg + 2, 0);
    for (int v = 0; v < n; ++v) ++bin[deg[v]];
    int start = 0;
    for (int d = 0; d <= max_deg; ++d) {
        int count = bin[d];
        bin[d] = start;
        start += count;
    }
    std::vector<int> vert(n), pos(n);
    for (int v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (int d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    long long d_g = 0;
    for (int i = 0; i < n; ++i) {
        int v = vert[i];
        ord.perm[i] = v;
        ord.rank[v] = i;
        d_g = std::max<long long>(d_g, deg[v]);
        for (int u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                int du = deg[u], pu = pos[u];
                int pw = bin[du];
                int w = vert[pw];
                if (u != w) {
                    std::swap(vert[pu], vert[pw]);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                ++bin[du];
                --deg[u];
            }
        }
        deg[v] = -1;  // removed marker; neighbors of later vertices skip via deg compare
    }
    ord.stat = d_g;
    return ord;
}

namespace detail {

/// |N^(2)(v)| within the still-alive vertices, by a two-depth BFS that
/// skips removed vertices. `stamp`/`mark` is a reusable scratch array.
inline long long alive_two_hop_count(const Graph& g, int v, const std::vector<char>& removed,
                                     std::vector<int>& mark, int stamp) {
    long long count = 0;
    mark[v] = stamp;
    for (int w : g.neighbors(v)) {
        if (removed[w] || mark[w] == stamp) continue;
        mark[w] = stamp;
        ++count;
    }
    for (int w : g.neighbors(v)) {
        if (removed[w]) continue;
        for (int x : g.neighbors(w)) {
            if (removed[x] || mark[x] == stamp) continue;
            mark[x] = stamp;
            ++count;
        }
    }
    return count;
}

}  // namespace detail

/// Two-hop peel: repeatedly remove the vertex with the fewest two-hop
/// neighbors in the remaining graph (ties by smallest id). After removing u,
/// strict two-hop neighbors are decremented by one and direct neighbors get
/// their count recomputed by a fresh two-depth BFS. Uses a comparison heap
/// since counts can drop by more than one per step.
inline Ordering two_hop_degeneracy_order(const Graph& g) {
    int n = g.n();
    Ordering ord;
    ord.kind = OrderingKind::two_hop_degeneracy;
    ord.perm.resize(n);
    ord.rank.resize(n);
    if (n == 0) return ord;

    std::vector<char> removed(n, 0);
    std::vector<int> mark(n, -1);
    std::vector<long long> tdeg(n);
    int stamp = 0;

    using Entry = std::pair<long long, int>;  // (tdeg, id), min-heap
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (int v = 0; v < n; ++v) {
        tdeg[v] = detail::alive_two_hop_count(g, v, removed, mark, ++stamp);
        heap.emplace(tdeg[v], v);
    }

    long long td_g = 0;
    for (int i = 0; i < n; ++i) {
        int u = -1;
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (!removed[v] && d == tdeg[v]) {
                u = v;
                break;
            }
        }
        ord.perm[i] = u;
        ord.rank[u] = i;
        td_g = std::max(td_g, tdeg[u]);
        removed[u] = 1;

        // Collect N^(2)(u) among alive vertices, split into direct and strict
        // two-hop neighbors.
        ++stamp;
        mark[u] = stamp;
        std::vector<int> direct, strict_two;
        for (int w : g.neighbors(u)) {
            if (removed[w] || mark[w] == stamp) continue;
            mark[w] = stamp;
            direct.push_back(w);
        }
        for (int w : g.neighbors(u)) {
            if (removed[w]) continue;
            for (int x : g.neighbors(w)) {
                if (removed[x] || mark[x] == stamp) continue;
                mark[x] = stamp;
                strict_two.push_back(x);
            }
        }
        for (int v : strict_two) {
            --tdeg[v];
            heap.emplace(tdeg[v], v);
        }
        for (int v : direct) {
            tdeg[v] = detail::alive_two_hop_count(g, v, removed, mark, ++stamp);
            heap.emplace(tdeg[v], v);
        }
    }
    ord.stat = td_g;
    return ord;
}

/// Identity order, for ablation runs. The statistic is not meaningful.
inline Ordering input_order(const Graph& g) {
    Ordering ord;
    ord.kind = OrderingKind::input;
    ord.perm.resize(g.n());
    ord.rank.resize(g.n());
    std::iota(ord.perm.begin(), ord.perm.end(), 0);
    std::iota(ord.rank.begin(), ord.rank.end(), 0);
    ord.stat = 0;
    return ord;
}

}  // namespace mfds

#endif  // MFDS_ORDERING_HPP
