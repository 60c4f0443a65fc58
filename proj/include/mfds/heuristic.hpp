#ifndef MFDS_HEURISTIC_HPP
#define MFDS_HEURISTIC_HPP

#include <cassert>
#include <set>
#include <vector>

#include "mfds/density.hpp"
#include "mfds/graph.hpp"
#include "mfds/ordering.hpp"
#include "mfds/solution.hpp"

namespace mfds {

/// Initial feasible solution: for each vertex v_i in degeneracy order, take
/// v_i plus its later-ranked neighbors (diameter <= 2 by construction since
/// everyone is adjacent to v_i) and peel minimum-degree vertices until the
/// remaining set is f-dense. The largest surviving set wins.
///
/// v_i is never peeled: its degree in the candidate subgraph is maximal, and
/// when a tie would select it the next-smallest vertex is taken instead.
/// The peel always terminates feasible because f(1) <= C(1,2) = 0.
inline Solution init_heuristic(const Graph& g, const DensityFunction& df) {
    int n = g.n();
    Ordering ord = degeneracy_order(g);

    std::vector<int> local(n, -1);
    std::vector<int> best_members;
    long long best_size = 0;

    for (int i = 0; i < n; ++i) {
        int anchor = ord.perm[i];
        std::vector<int> verts{anchor};
        for (int w : g.neighbors(anchor))
            if (ord.rank[w] > i) verts.push_back(w);
        if (static_cast<long long>(verts.size()) <= best_size && best_size > 0) continue;

        int k = static_cast<int>(verts.size());
        for (int j = 0; j < k; ++j) local[verts[j]] = j;
        std::vector<std::vector<int>> adj(k);
        long long edges = 0;
        for (int j = 0; j < k; ++j) {
            for (int w : g.neighbors(verts[j])) {
                int lw = local[w];
                if (lw > j) {
                    adj[j].push_back(lw);
                    adj[lw].push_back(j);
                    ++edges;
                }
            }
        }
        for (int v : verts) local[v] = -1;

        std::vector<int> deg(k);
        std::vector<char> alive(k, 1);
        std::set<std::pair<int, int>> by_degree;  // (degree, local id), anchor excluded
        for (int j = 0; j < k; ++j) {
            deg[j] = static_cast<int>(adj[j].size());
            if (j != 0) by_degree.emplace(deg[j], j);
        }
        long long size = k;
        while (!df.edges_suffice(edges, size)) {
            auto it = by_degree.begin();
            int victim = it->second;
            by_degree.erase(it);
            alive[victim] = 0;
            edges -= deg[victim];
            for (int w : adj[victim]) {
                if (!alive[w]) continue;
                if (w != 0) by_degree.erase({deg[w], w});
                --deg[w];
                if (w != 0) by_degree.emplace(deg[w], w);
            }
            --size;
        }
        if (!alive[0]) throw std::logic_error("heuristic peel removed its anchor");

        if (size > best_size) {
            best_size = size;
            best_members.clear();
            for (int j = 0; j < k; ++j)
                if (alive[j]) best_members.push_back(verts[j]);
        }
    }

    VertexSet s(n);
    for (int v : best_members) s.add(v);
    Solution sol = make_solution(g, s, df, SolutionSource::heuristic);
    if (!sol.feasible()) throw std::logic_error("heuristic produced an infeasible solution");
    return sol;
}

}  // namespace mfds

#endif  // MFDS_HEURISTIC_HPP
