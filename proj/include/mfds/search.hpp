#ifndef MFDS_SEARCH_HPP
#define MFDS_SEARCH_HPP

#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "mfds/bounds.hpp"
#include "mfds/density.hpp"
#include "mfds/graph.hpp"
#include "mfds/solution.hpp"

namespace mfds {

struct SearchOptions {
    enum class BoundMode { sort, simple, none };
    BoundMode bound_mode = BoundMode::sort;
    bool reductions = true;
    std::optional<uint64_t> branch_seed;  // random branching; default picks max w_S
    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool debug_check = false;  // recompute incremental state from scratch each node
};

struct SearchStats {
    long long nodes = 0;
    long long bound_prunes = 0;
    long long hereditary_cuts = 0;
    long long hereditary_removed = 0;
    long long forced_includes = 0;
    long long incumbent_updates = 0;
    bool deadline_hit = false;

    void merge(const SearchStats& o) {
        nodes += o.nodes;
        bound_prunes += o.bound_prunes;
        hereditary_cuts += o.hereditary_cuts;
        hereditary_removed += o.hereditary_removed;
        forced_includes += o.forced_includes;
        incumbent_updates += o.incumbent_updates;
        deadline_hit = deadline_hit || o.deadline_hit;
    }
};

/// The (lb, best) pair shared across concurrent searches. Readers may see a
/// stale, smaller lb, which only weakens pruning; writers update only when
/// strictly larger, so lb never decreases.
class SharedIncumbent {
public:
    long long lb() const { return lb_.load(std::memory_order_relaxed); }

    void seed(Solution sol) {
        std::lock_guard lock(mu_);
        best_ = std::move(sol);
        lb_.store(best_.size(), std::memory_order_relaxed);
    }

    bool offer(std::vector<int> members, long long edges) {
        long long sz = static_cast<long long>(members.size());
        if (sz <= lb()) return false;
        std::lock_guard lock(mu_);
        if (sz <= best_.size()) return false;
        std::sort(members.begin(), members.end());
        best_.members = std::move(members);
        best_.edge_count = edges;
        best_.fdense = true;
        best_.low_diameter = true;
        best_.source = SolutionSource::bnb;
        lb_.store(sz, std::memory_order_relaxed);
        return true;
    }

    Solution snapshot() const {
        std::lock_guard lock(mu_);
        return best_;
    }

private:
    std::atomic<long long> lb_{0};
    mutable std::mutex mu_;
    Solution best_;
};

/// Degree-based forced inclusion: u may be moved into S without an exclude
/// branch when its degree in the subproblem graph is at least |V|-2 and
/// S u {u} stays f-dense with diameter <= 2.
inline bool forced_include_applies(const Graph& g, const DensityFunction& df, const VertexSet& s,
                                   int u) {
    if (g.degree(u) < g.n() - 2) return false;
    VertexSet su = s;
    su.add(u);
    if (!df.edges_suffice(edge_count(g, su), su.size())) return false;
    return diameter_at_most_two(g, su);
}

/// Hereditary candidate reduction: drop every v in C whose addition would
/// already violate f-density (no feasible superset can contain it). No-op
/// when the density function is not classified hereditary.
inline VertexSet hereditary_prune(const Graph& g, const DensityFunction& df, const VertexSet& s,
                                  const VertexSet& c) {
    if (!df.hereditary_rules()) return c;
    long long edges_s = edge_count(g, s);
    VertexSet out = c;
    c.for_each([&](int v) {
        long long adj_in_s = 0;
        s.for_each([&](int u) {
            if (g.adjacent(u, v)) ++adj_in_s;
        });
        if (!df.edges_suffice(edges_s + adj_in_s, s.size() + 1)) out.remove(v);
    });
    return out;
}

namespace detail {

class Searcher {
public:
    Searcher(const Graph& g, const DensityFunction& df, SharedIncumbent& inc,
             const SearchOptions& opt, SearchStats& st, const std::vector<int>* to_parent)
        : g_(g), df_(df), inc_(inc), opt_(opt), st_(st), to_parent_(to_parent),
          s_(g.n()), w_(g.n(), 0), mark_(g.n(), 0), hered_(df.hereditary_rules()) {
        if (opt.branch_seed) rng_.emplace(*opt.branch_seed);
    }

    void start(const VertexSet& s0, const VertexSet& c0) {
        s_ = s0;
        s_list_ = s0.to_vector();
        comp_edges_ = pairs_of(s0.size()) - edge_count(g_, s0);
        std::vector<int> cand = c0.to_vector();
        for (int v : cand) {
            assert(!s0.contains(v));
            int w = 0;
            s0.for_each([&](int u) {
                if (!g_.adjacent(u, v)) ++w;
            });
            w_[v] = w;
        }
        run(std::move(cand));
    }

private:
    void run(std::vector<int> cand) {
        ++st_.nodes;
        if ((st_.nodes == 1 || (st_.nodes & 1023) == 0) && opt_.deadline &&
            std::chrono::steady_clock::now() > *opt_.deadline)
            st_.deadline_hit = true;
        if (st_.deadline_hit) return;

        long long ssize = static_cast<long long>(s_list_.size());
        long long edges_s = pairs_of(ssize) - comp_edges_;
        if (opt_.debug_check) verify_state(cand);

        if (ssize > inc_.lb() && df_.edges_suffice(edges_s, ssize) &&
            diameter_at_most_two(g_, s_)) {
            if (inc_.offer(translated(), edges_s)) ++st_.incumbent_updates;
        }

        if (hered_ && !df_.edges_suffice(edges_s, ssize)) {
            ++st_.hereditary_cuts;
            return;
        }

        long long ub = upper_bound(cand, ssize);
        if (ub <= inc_.lb()) {
            ++st_.bound_prunes;
            return;
        }

        if (hered_ && opt_.reductions) {
            size_t before = cand.size();
            std::erase_if(cand, [&](int v) {
                return !df_.edges_suffice(edges_s + ssize - w_[v], ssize + 1);
            });
            st_.hereditary_removed += static_cast<long long>(before - cand.size());
        }
        if (cand.empty()) return;

        int u = pick_branch_vertex(cand);
        bool forced = opt_.reductions && forced_applies(u, ssize, edges_s);
        if (forced) ++st_.forced_includes;

        std::vector<int> child;
        child.reserve(cand.size() - 1);
        for (int v : cand)
            if (v != u) child.push_back(v);

        include(u, child);
        run(child);
        exclude(u, child);
        if (!forced) run(std::move(child));
    }

    long long upper_bound(const std::vector<int>& cand, long long ssize) {
        if (opt_.bound_mode == SearchOptions::BoundMode::none)
            return ssize + static_cast<long long>(cand.size());
        VertexSet c(g_.n());
        for (int v : cand) c.add(v);
        BoundContext ctx{s_, c, comp_edges_, w_};
        return opt_.bound_mode == SearchOptions::BoundMode::sort ? sort_bound(g_, df_, ctx)
                                                                 : simple_bound(g_, df_, ctx);
    }

    int pick_branch_vertex(const std::vector<int>& cand) {
        if (rng_) {
            std::uniform_int_distribution<size_t> dist(0, cand.size() - 1);
            return cand[dist(*rng_)];
        }
        int best = cand.front();
        for (int v : cand)
            if (w_[v] > w_[best]) best = v;  // cand ascending, ties keep smallest id
        return best;
    }

    bool forced_applies(int u, long long ssize, long long edges_s) {
        if (g_.degree(u) < g_.n() - 2) return false;
        if (!df_.edges_suffice(edges_s + ssize - w_[u], ssize + 1)) return false;
        s_.add(u);
        bool ok = diameter_at_most_two(g_, s_);
        s_.remove(u);
        return ok;
    }

    void include(int u, const std::vector<int>& child) {
        s_.add(u);
        s_list_.push_back(u);
        comp_edges_ += w_[u];
        for (int v : g_.neighbors(u)) mark_[v] = 1;
        for (int v : child)
            if (!mark_[v]) ++w_[v];
        for (int v : g_.neighbors(u)) mark_[v] = 0;
    }

    void exclude(int u, const std::vector<int>& child) {
        for (int v : g_.neighbors(u)) mark_[v] = 1;
        for (int v : child)
            if (!mark_[v]) --w_[v];
        for (int v : g_.neighbors(u)) mark_[v] = 0;
        comp_edges_ -= w_[u];
        s_list_.pop_back();
        s_.remove(u);
    }

    std::vector<int> translated() const {
        if (!to_parent_) return s_list_;
        std::vector<int> out;
        out.reserve(s_list_.size());
        for (int v : s_list_) out.push_back((*to_parent_)[v]);
        return out;
    }

    void verify_state(const std::vector<int>& cand) const {
        long long comp = pairs_of(static_cast<long long>(s_list_.size())) - edge_count(g_, s_);
        if (comp != comp_edges_)
            throw std::logic_error("incremental complement-edge count out of sync");
        for (int v : cand) {
            int w = 0;
            s_.for_each([&](int u) {
                if (!g_.adjacent(u, v)) ++w;
            });
            if (w != w_[v]) throw std::logic_error("incremental w_S out of sync");
            if (s_.contains(v)) throw std::logic_error("candidate already in S");
        }
    }

    const Graph& g_;
    const DensityFunction& df_;
    SharedIncumbent& inc_;
    const SearchOptions& opt_;
    SearchStats& st_;
    const std::vector<int>* to_parent_;

    VertexSet s_;
    std::vector<int> s_list_;
    std::vector<int> w_;
    std::vector<char> mark_;
    long long comp_edges_ = 0;
    bool hered_;
    std::optional<std::mt19937_64> rng_;
};

}  // namespace detail

/// Branch-and-bound over the restricted problem {S* : S0 <= S* <= S0 u C0}.
/// Improvements are published through the shared incumbent; `to_parent`,
/// when given, translates local vertex ids before publication. Returns the
/// incumbent snapshot (best over everything offered so far).
inline Solution branch_bound(const Graph& g, const DensityFunction& df, const VertexSet& s0,
                             const VertexSet& c0, SharedIncumbent& incumbent,
                             const SearchOptions& opt, SearchStats& stats,
                             const std::vector<int>* to_parent = nullptr) {
    detail::Searcher searcher(g, df, incumbent, opt, stats, to_parent);
    searcher.start(s0, c0);
    return incumbent.snapshot();
}

}  // namespace mfds

#endif  // MFDS_SEARCH_HPP
