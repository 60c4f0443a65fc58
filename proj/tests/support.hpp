#ifndef MFDS_TESTS_SUPPORT_HPP
#define MFDS_TESTS_SUPPORT_HPP

#include <queue>
#include <random>
#include <vector>

#include "mfds/graph.hpp"

namespace testsupport {

/// Deterministic G(n, p) generator.
inline mfds::Graph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return mfds::Graph::from_edge_pairs(n, std::move(edges));
}

/// BFS distances inside G[s] from src; -1 means unreachable.
inline std::vector<int> bfs_distances(const mfds::Graph& g, const mfds::VertexSet& s, int src) {
    std::vector<int> dist(g.n(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (!s.contains(w) || dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            q.push(w);
        }
    }
    return dist;
}

/// Independent diameter <= 2 check via per-vertex BFS.
inline bool slow_diam_leq_two(const mfds::Graph& g, const mfds::VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (!ok) return;
        auto dist = bfs_distances(g, s, v);
        s.for_each([&](int u) {
            if (dist[u] < 0 || dist[u] > 2) ok = false;
        });
    });
    return ok;
}

/// Independent edge counter: tests every pair.
inline long long slow_edge_count(const mfds::Graph& g, const mfds::VertexSet& s) {
    std::vector<int> v = s.to_vector();
    long long count = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (g.adjacent(v[i], v[j])) ++count;
    return count;
}

}  // namespace testsupport

#endif
