#ifndef MFDS_MIP_HPP
#define MFDS_MIP_HPP

#include <ostream>
#include <string>
#include <vector>

#include "mfds/bounds.hpp"
#include "mfds/density.hpp"
#include "mfds/graph.hpp"
#include "mfds/heuristic.hpp"

namespace mfds {

struct MipWindow {
    long long lo = 1;  // heuristic solution size
    long long hi = 1;  // root SortBound
};

/// Solution-size window for the z-variables: the heuristic gives the lower
/// end, the root SortBound (S = empty, C = V) the upper end.
inline MipWindow compute_window(const Graph& g, const DensityFunction& df) {
    MipWindow w;
    w.lo = init_heuristic(g, df).size();
    VertexSet s(g.n()), c(g.n());
    for (int v = 0; v < g.n(); ++v) c.add(v);
    long long comp = 0;
    std::vector<int> weights;
    BoundContext ctx = BoundContext::make(g, s, c, comp, weights);
    w.hi = sort_bound(g, df, ctx);
    return w;
}

struct MipSummary {
    long long x_vars = 0, y_vars = 0, z_vars = 0;
    long long dense_rows = 0;       // edge-density row
    long long link_rows = 0;        // y_ij <= x_i, y_ij <= x_j
    long long cardinality_rows = 0; // sum x = sum k z_k
    long long convexity_rows = 0;   // sum z = 1
    long long dist_far_rows = 0;    // dist > 2 pairs
    long long dist_two_rows = 0;    // dist = 2 pairs
};

namespace detail {

/// f(k) as an exact terminating decimal when possible (gamma is given as a
/// decimal string, so the quasi family always terminates); falls back to
/// full-precision floating point otherwise.
inline std::string f_coefficient(const DensityFunction& df, long long k) {
    if (df.family() == DensityFunction::Family::defective)
        return std::to_string(pairs_of(k) - df.defect());
    if (df.family() == DensityFunction::Family::quasi) {
        // f(k) = num*k*(k-1) / (2*den): long division with termination check
        long long numerator = df.gamma_num() * k * (k - 1);
        long long denominator = 2 * df.gamma_den();
        long long integer_part = numerator / denominator;
        long long rem = numerator % denominator;
        std::string out = std::to_string(integer_part);
        if (rem != 0) {
            out += '.';
            for (int digits = 0; rem != 0 && digits < 30; ++digits) {
                rem *= 10;
                out += static_cast<char>('0' + rem / denominator);
                rem %= denominator;
            }
            if (rem == 0) return out;
        } else {
            return out;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", df.f_value(k));
    return buf;
}

/// Pairwise distance classes in G, bucketed as adjacent / exactly 2 / more,
/// via per-vertex depth-2 BFS.
inline void classify_pairs(const Graph& g, std::vector<std::pair<int, int>>& dist_two,
                           std::vector<std::pair<int, int>>& dist_far) {
    int n = g.n();
    std::vector<int> mark(n, -1);
    for (int u = 0; u < n; ++u) {
        mark[u] = u;
        for (int w : g.neighbors(u)) mark[w] = u;
        for (int w : g.neighbors(u)) {
            for (int x : g.neighbors(w)) {
                if (x > u && mark[x] != u) {
                    dist_two.emplace_back(u, x);
                    mark[x] = u;
                }
            }
        }
        for (int v = u + 1; v < n; ++v)
            if (mark[v] != u) dist_far.emplace_back(u, v);
    }
}

}  // namespace detail

/// Writes the MIP model in LP text format: binary x per vertex, continuous
/// y >= 0 per edge and z >= 0 per k in the window, the edge-density row,
/// linking rows, cardinality and convexity rows, and one distance row per
/// non-adjacent vertex pair.
inline MipSummary export_lp(const Graph& g, const DensityFunction& df, const MipWindow& window,
                            std::ostream& out) {
    int n = g.n();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (v > u) edges.emplace_back(u, v);

    MipSummary summary;
    summary.x_vars = n;
    summary.y_vars = static_cast<long long>(edges.size());
    summary.z_vars = window.hi - window.lo + 1;

    auto yname = [](int u, int v) { return "y" + std::to_string(u) + "_" + std::to_string(v); };

    out << "\\ maximum low-diameter f-dense subgraph model\n";
    out << "Maximize\n obj:";
    for (int v = 0; v < n; ++v) out << (v ? " + v" : " v") << v;
    out << "\nSubject To\n";

    // Edge-density row: sum y_ij - sum f(k) z_k >= 0
    out << " dense:";
    bool first = true;
    for (const auto& [u, v] : edges) {
        out << (first ? " " : " + ") << yname(u, v);
        first = false;
    }
    if (edges.empty()) out << " 0 v0";
    for (long long k = window.lo; k <= window.hi; ++k)
        out << " - " << detail::f_coefficient(df, k) << " z" << k;
    out << " >= 0\n";
    summary.dense_rows = 1;

    for (const auto& [u, v] : edges) {
        out << " link_" << u << "_" << v << "_a: " << yname(u, v) << " - v" << u << " <= 0\n";
        out << " link_" << u << "_" << v << "_b: " << yname(u, v) << " - v" << v << " <= 0\n";
        summary.link_rows += 2;
    }

    out << " card:";
    for (int v = 0; v < n; ++v) out << (v ? " + v" : " v") << v;
    for (long long k = window.lo; k <= window.hi; ++k) out << " - " << k << " z" << k;
    out << " = 0\n";
    summary.cardinality_rows = 1;

    out << " conv:";
    for (long long k = window.lo; k <= window.hi; ++k)
        out << (k == window.lo ? " z" : " + z") << k;
    out << " = 1\n";
    summary.convexity_rows = 1;

    std::vector<std::pair<int, int>> dist_two, dist_far;
    detail::classify_pairs(g, dist_two, dist_far);
    for (const auto& [u, v] : dist_far) {
        out << " far_" << u << "_" << v << ": v" << u << " + v" << v << " <= 1\n";
        ++summary.dist_far_rows;
    }
    for (const auto& [u, v] : dist_two) {
        out << " two_" << u << "_" << v << ": v" << u << " + v" << v;
        auto a = g.neighbors(u);
        auto b = g.neighbors(v);
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else {
                out << " - v" << a[i];
                ++i;
                ++j;
            }
        }
        out << " <= 1\n";
        ++summary.dist_two_rows;
    }

    out << "Binaries\n";
    for (int v = 0; v < n; ++v) out << " v" << v;
    out << "\nEnd\n";
    return summary;
}

}  // namespace mfds

#endif  // MFDS_MIP_HPP
