// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only when every
// criterion passes (dataset-gated checks may SKIP).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef MFDS_ACCEPT_DATA_DIR
#define MFDS_ACCEPT_DATA_DIR "tests/data"
#endif

#include "mfds/decompose.hpp"
#include "mfds/mip.hpp"
#include "mfds/oracle.hpp"
#include "support.hpp"

using namespace mfds;
using testsupport::random_graph;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
}

void report_skip(const std::string& name, const std::string& why) {
    std::printf("[SKIP] %s — %s\n", name.c_str(), why.c_str());
}

std::vector<DensityFunction> suite_densities() {
    return {DensityFunction::quasi("0.85"), DensityFunction::quasi("0.90"),
            DensityFunction::quasi("0.95"), DensityFunction::quasi("0.99"),
            DensityFunction::defective(1), DensityFunction::defective(3)};
}

std::vector<Graph> suite_graphs() {
    std::vector<Graph> graphs;
    uint64_t seed = 1;
    for (double p : {0.2, 0.5, 0.8})
        for (int n = 4; n <= 14; ++n)
            for (int rep = 0; rep < 10; ++rep) graphs.push_back(random_graph(n, p, seed++));
    return graphs;  // 330 graphs
}

// --- criterion 1: oracle equivalence -------------------------------------
void check_oracle_equivalence(const std::vector<Graph>& graphs) {
    long long instances = 0, mismatches = 0;
    auto densities = suite_densities();
    for (const Graph& g : graphs) {
        for (const auto& df : densities) {
            ++instances;
            int truth = brute_force(g, df).optimum_size;
            SolveOptions deg;
            SolveOptions twohop;
            twohop.order = OrderingKind::two_hop_degeneracy;
            if (solve(g, df, deg).best.size() != truth) ++mismatches;
            if (solve(g, df, twohop).best.size() != truth) ++mismatches;
            if (solve_bnb_only(g, df, {}).best.size() != truth) ++mismatches;
        }
    }
    report("oracle equivalence (solve deg/twohop + bnb = brute force)", mismatches == 0,
           std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches");
}

// --- criterion 2: bound soundness -----------------------------------------
void check_bound_soundness() {
    std::mt19937_64 rng(424242);
    long long triples = 0, violations = 0;
    auto densities = suite_densities();
    while (triples < 500) {
        int n = 6 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng());
        VertexSet s(n), c(n);
        for (int v = 0; v < n; ++v) {
            switch (rng() % 3) {
                case 0: s.add(v); break;
                case 1: c.add(v); break;
                default: break;
            }
        }
        if (s.size() + c.size() > 12) continue;
        const DensityFunction& df = densities[static_cast<size_t>(triples) % densities.size()];
        ++triples;
        int truth = brute_force_restricted(g, df, s, c).optimum_size;
        long long comp = 0;
        std::vector<int> w;
        BoundContext ctx = BoundContext::make(g, s, c, comp, w);
        if (simple_bound(g, df, ctx) < truth) ++violations;
        if (sort_bound(g, df, ctx) < truth) ++violations;
    }
    report("bound soundness (simple_bound, sort_bound >= restricted oracle)", violations == 0,
           std::to_string(triples) + " triples, " + std::to_string(violations) + " violations");
}

// --- criterion 3: paper bound replay ---------------------------------------
void check_paper_replay() {
    std::vector<long long> weights = {0, 0, 2, 2};
    long long q = 2 + prefix_k_select(DensityFunction::quasi("0.8"), 2, 1, weights, false);
    long long d = 2 + prefix_k_select(DensityFunction::defective(4), 2, 1, weights, false);
    report("paper bound replay (quasi 0.8 -> 4, defective 4 -> 5)", q == 4 && d == 5,
           "got " + std::to_string(q) + " and " + std::to_string(d));
}

// --- criterion 4: decomposition size bounds --------------------------------
// Theorem 1/2 with the anchor counted: V_i includes v_i on top of its later
// two-hop neighbors, so the attainable guarantees are alpha <= d*Delta + 1
// and alpha <= td + 1 under this library's self-excluded N^(2) convention
// (e.g. K4 has td = 3 but V_0 = 4).
void check_size_bounds(const std::vector<Graph>& graphs) {
    long long checked = 0, violations = 0;
    auto eval = [&](const Graph& g) {
        if (g.n() == 0) return;
        long long max_deg = 0;
        for (int v = 0; v < g.n(); ++v) max_deg = std::max<long long>(max_deg, g.degree(v));
        Ordering deg = degeneracy_order(g);
        Ordering twohop = two_hop_degeneracy_order(g);
        long long alpha_deg = 0, alpha_two = 0;
        for (int i = 0; i < g.n(); ++i) {
            alpha_deg = std::max<long long>(alpha_deg,
                                            build_subproblem(g, deg, i).local_graph.n());
            alpha_two = std::max<long long>(alpha_two,
                                            build_subproblem(g, twohop, i).local_graph.n());
        }
        ++checked;
        if (alpha_deg > std::min<long long>(deg.stat * max_deg + 1, g.n())) ++violations;
        if (alpha_two > std::min<long long>(twohop.stat + 1, g.n())) ++violations;
    };
    for (const Graph& g : graphs) eval(g);
    // fixture graphs
    std::ifstream tiny(std::string(MFDS_ACCEPT_DATA_DIR) + "/tiny10.edges");
    if (tiny.good()) eval(load_edge_list(tiny));
    std::ifstream mtx(std::string(MFDS_ACCEPT_DATA_DIR) + "/triangle.mtx");
    if (mtx.good()) eval(load_matrix_market(mtx));
    report("theorem 1/2 size bounds (alpha <= min(d*Delta, |V|-1)+1, alpha <= td+1)",
           violations == 0,
           std::to_string(checked) + " graphs, " + std::to_string(violations) + " violations");
}

// --- criterion 5: hereditary classification and Lemma 1/2 ------------------
void check_hereditary() {
    bool ok = true;
    for (long long s : {0LL, 1LL, 3LL})
        ok = ok && DensityFunction::defective(s).classify_hereditary() == HereditaryClass::hereditary;
    for (const char* gamma : {"0.85", "0.9", "0.99"})
        ok = ok &&
             DensityFunction::quasi(gamma).classify_hereditary() == HereditaryClass::not_hereditary;

    // Lemma 1 behavior: on all subsets of random n<=8 graphs, dropping any one
    // vertex of an f-dense set keeps it f-dense for the hereditary families.
    for (uint64_t seed = 0; seed < 8 && ok; ++seed) {
        Graph g = random_graph(8, 0.55, 777000 + seed);
        for (const auto& df : {DensityFunction::defective(1), DensityFunction::defective(3)}) {
            for (uint32_t mask = 0; mask < (1u << 8) && ok; ++mask) {
                VertexSet set(8);
                for (int v = 0; v < 8; ++v)
                    if (mask >> v & 1) set.add(v);
                if (!is_fdense(g, set, df)) continue;
                for (int v = 0; v < 8; ++v) {
                    if (!set.contains(v)) continue;
                    VertexSet t = set;
                    t.remove(v);
                    if (!is_fdense(g, t, df)) ok = false;
                }
            }
        }
    }

    // Lemma 2 witness: K13 plus an isolated vertex is 0.85-dense, yet the
    // induced pair {clique vertex, isolated} is not.
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) edges.emplace_back(u, v);
    Graph witness = Graph::from_edge_pairs(14, std::move(edges));
    VertexSet full(14), pair(14);
    for (int v = 0; v < 14; ++v) full.add(v);
    pair.add(0);
    pair.add(13);
    DensityFunction q85 = DensityFunction::quasi("0.85");
    bool witness_ok = is_fdense(witness, full, q85) && !is_fdense(witness, pair, q85);

    report("hereditary classification + Lemma 1/2 behavior", ok && witness_ok);
}

// --- criterion 6: pruning effectiveness ------------------------------------
void check_pruning(const std::vector<Graph>& graphs) {
    long long instances = 0, not_worse = 0, strictly_better = 0, changed = 0;
    auto densities = suite_densities();
    for (size_t gi = 0; gi < graphs.size(); gi += 3) {  // thinned suite, still hundreds
        const Graph& g = graphs[gi];
        const auto& df = densities[gi % densities.size()];
        SolveOptions with;
        SolveOptions without;
        without.search.bound_mode = SearchOptions::BoundMode::none;
        SolveResult a = solve(g, df, with);
        SolveResult b = solve(g, df, without);
        ++instances;
        if (a.stats.nodes <= b.stats.nodes) ++not_worse;
        if (a.stats.nodes < b.stats.nodes) ++strictly_better;
        if (a.best.size() != b.best.size()) ++changed;
    }
    bool pass = changed == 0 && not_worse * 100 >= instances * 95;
    report("pruning effectiveness (SortBound nodes <= ablated on >= 95%, optimum unchanged)",
           pass,
           std::to_string(not_worse) + "/" + std::to_string(instances) + " not worse, " +
               std::to_string(strictly_better) + " strictly better, " + std::to_string(changed) +
               " optimum changes");
}

// --- criterion 7: dataset-gated paper optima --------------------------------
void check_paper_datasets() {
    struct Row {
        const char* file;
        DensityFunction df;
        int expected;
        double budget_s;
    };
    std::vector<Row> rows = {{"web-BerkStan.mtx", DensityFunction::quasi("0.99"), 29, 60},
                             {"scc_infect-dublin.mtx", DensityFunction::defective(1), 84, 120},
                             {"web-indochina-2004.mtx", DensityFunction::defective(1), 50, 120}};
    const char* env = std::getenv("MFDS_DATASET_DIR");
    std::filesystem::path dir = env ? env : std::string(MFDS_ACCEPT_DATA_DIR) + "/datasets";
    bool any = false, ok = true;
    std::string detail;
    for (const Row& row : rows) {
        std::filesystem::path path = dir / row.file;
        std::filesystem::path alt = path;
        alt.replace_extension(".edges");
        if (!std::filesystem::exists(path) && std::filesystem::exists(alt)) path = alt;
        if (!std::filesystem::exists(path)) continue;
        any = true;
        std::ifstream in(path);
        Graph g = path.extension() == ".mtx" ? load_matrix_market(in) : load_edge_list(in);
        SolveOptions opt;
        opt.time_limit_seconds = row.budget_s;
        SolveResult r = solve(g, row.df, opt);
        if (!r.complete || r.best.size() != row.expected) {
            ok = false;
            detail += std::string(row.file) + " got " + std::to_string(r.best.size()) +
                      (r.complete ? "" : " (timeout)") + " want " + std::to_string(row.expected) + "; ";
        }
    }
    if (!any)
        report_skip("paper optima regression", "dataset files not present (set MFDS_DATASET_DIR)");
    else
        report("paper optima regression (Tables 1-2 values)", ok, detail);
}

// --- criterion 8: MIP export structure --------------------------------------
void check_mip_structure() {
    Graph p4 = Graph::from_edge_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
    DensityFunction df = DensityFunction::quasi("0.9");
    MipWindow w = compute_window(p4, df);
    std::ostringstream out;
    MipSummary s = export_lp(p4, df, w, out);
    bool pass = s.dist_far_rows == 1 && s.dist_two_rows == 2 && s.link_rows == 2 * p4.m() &&
                s.x_vars == 4 && s.y_vars == 3 && s.z_vars == w.hi - w.lo + 1;
    report("MIP export structure on P4 (1 far row, 2 dist-2 rows, 2|E| links, var counts)", pass);
}

}  // namespace

int main(int, char**) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> graphs = suite_graphs();
    check_oracle_equivalence(graphs);
    check_bound_soundness();
    check_paper_replay();
    check_size_bounds(graphs);
    check_hereditary();
    check_pruning(graphs);
    check_paper_datasets();
    check_mip_structure();
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s (%lld failing criteria, %.1f s)\n", failures == 0 ? "ALL PASS" : "FAILURES",
                static_cast<long long>(failures), secs);
    return failures == 0 ? 0 : 1;
}
