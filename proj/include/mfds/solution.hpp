#ifndef MFDS_SOLUTION_HPP
#define MFDS_SOLUTION_HPP

#include <vector>

#include "mfds/density.hpp"
#include "mfds/graph.hpp"

namespace mfds {

enum class SolutionSource { heuristic, bnb, oracle };

/// A vertex set with its cached edge count and feasibility flags.
struct Solution {
    std::vector<int> members;  // sorted vertex ids
    long long edge_count = 0;
    bool fdense = false;
    bool low_diameter = false;
    SolutionSource source = SolutionSource::heuristic;

    int size() const { return static_cast<int>(members.size()); }
    bool feasible() const { return fdense && low_diameter; }
};

/// Builds a Solution from a vertex set, evaluating both feasibility flags
/// directly on the graph.
inline Solution make_solution(const Graph& g, const VertexSet& s, const DensityFunction& df,
                              SolutionSource source) {
    Solution sol;
    sol.members = s.to_vector();
    sol.edge_count = edge_count(g, s);
    sol.fdense = df.edges_suffice(sol.edge_count, s.size());
    sol.low_diameter = diameter_at_most_two(g, s);
    sol.source = source;
    return sol;
}

}  // namespace mfds

#endif  // MFDS_SOLUTION_HPP
