// mfds: exact solver for the maximum low-diameter f-dense subgraph problem.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfds/decompose.hpp"
#include "mfds/density.hpp"
#include "mfds/graph.hpp"
#include "mfds/heuristic.hpp"
#include "mfds/mip.hpp"
#include "mfds/oracle.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

int g_log_level = 1;  // 0 silent, 1 warn, 2 info, 3 debug

void init_logging() {
    const char* env = std::getenv("MFDS_LOG");
    if (!env) return;
    std::string s = env;
    if (s == "silent" || s == "0") g_log_level = 0;
    else if (s == "warn" || s == "1") g_log_level = 1;
    else if (s == "info" || s == "2") g_log_level = 2;
    else if (s == "debug" || s == "3") g_log_level = 3;
}

void log(int level, const std::string& msg) {
    if (g_log_level >= level) std::cerr << "mfds: " << msg << "\n";
}

struct CommonOpts {
    std::string input;
    std::string format = "auto";
    std::string density = "quasi:0.9";
    std::string order = "deg";
    double time_limit = 0;  // 0 = none
    int threads = 1;
    uint64_t branch_seed = 0;
    bool seeded = false;
    bool no_sortbound = false;
    bool simple_bound_only = false;
    bool no_reductions = false;
    std::string out;
};

void add_graph_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-i,--input", o.input, "graph file")->required();
    cmd->add_option("--format", o.format, "edgelist|mm|auto (default auto)")
        ->check(CLI::IsMember({"auto", "edgelist", "mm"}));
}

void add_density_opt(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-d,--density", o.density, "density spec, family:parameter (default quasi:0.9)");
}

void add_out_opt(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-o,--out", o.out, "write result here instead of stdout");
}

void add_solver_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-t,--time-limit", o.time_limit, "wall-clock budget in seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "parallel subproblem workers (default 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--branch-seed", o.branch_seed, "random branching with this seed")
        ->each([&o](const std::string&) { o.seeded = true; });
    cmd->add_flag("--no-sortbound", o.no_sortbound, "ablation: fall back to the simple sorted bound");
    cmd->add_flag("--no-bound", o.simple_bound_only, "ablation: disable bounding entirely");
    cmd->add_flag("--no-reductions", o.no_reductions, "ablation: disable reduction rules");
}

mfds::Graph load_graph(const CommonOpts& o) {
    std::ifstream in(o.input);
    if (!in) throw mfds::ParseError("cannot open input file '" + o.input + "'");
    std::string fmt = o.format;
    if (fmt == "auto") {
        bool mm = o.input.size() >= 4 && o.input.substr(o.input.size() - 4) == ".mtx";
        if (!mm) {
            std::string first;
            std::getline(in, first);
            mm = first.rfind("%%MatrixMarket", 0) == 0;
            in.clear();
            in.seekg(0);
        }
        fmt = mm ? "mm" : "edgelist";
    }
    log(2, "loading " + o.input + " as " + fmt);
    return fmt == "mm" ? mfds::load_matrix_market(in) : mfds::load_edge_list(in);
}

mfds::SolveOptions solver_options(const CommonOpts& o) {
    mfds::SolveOptions opt;
    if (o.order == "deg") opt.order = mfds::OrderingKind::degeneracy;
    else if (o.order == "twohop") opt.order = mfds::OrderingKind::two_hop_degeneracy;
    else opt.order = mfds::OrderingKind::input;
    if (o.no_sortbound) opt.search.bound_mode = mfds::SearchOptions::BoundMode::simple;
    if (o.simple_bound_only) opt.search.bound_mode = mfds::SearchOptions::BoundMode::none;
    opt.search.reductions = !o.no_reductions;
    if (o.seeded) opt.search.branch_seed = o.branch_seed;
    opt.threads = o.threads;
    if (o.time_limit > 0) opt.time_limit_seconds = o.time_limit;
    return opt;
}

void emit(const CommonOpts& o, const ordered_json& doc) {
    std::string text = doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out);
        if (!out) throw std::runtime_error("cannot open output file '" + o.out + "'");
        out << text;
    }
}

ordered_json labels_of(const mfds::Graph& g, const std::vector<int>& members) {
    ordered_json arr = ordered_json::array();
    for (int v : members) arr.push_back(g.label(v));
    return arr;
}

ordered_json result_json(const mfds::Graph& g, const mfds::SolveResult& r) {
    ordered_json doc;
    doc["optimum_size"] = r.best.size();
    doc["vertices"] = labels_of(g, r.best.members);
    doc["feasible"] = r.best.feasible();
    doc["complete"] = r.complete;
    doc["alpha_G"] = r.alpha;
    doc["ordering_stat"] = r.ordering_stat;
    doc["nodes"] = r.stats.nodes;
    doc["time_ms"] = r.total_ms;
    doc["per_phase_ms"] = {{"heuristic", r.heuristic_ms},
                           {"ordering", r.ordering_ms},
                           {"search", r.search_ms}};
    doc["stats"] = {{"bound_prunes", r.stats.bound_prunes},
                    {"hereditary_cuts", r.stats.hereditary_cuts},
                    {"hereditary_removed", r.stats.hereditary_removed},
                    {"forced_includes", r.stats.forced_includes},
                    {"incumbent_updates", r.stats.incumbent_updates},
                    {"subproblems_skipped", r.subproblems_skipped}};
    return doc;
}

int run_solve(const CommonOpts& o, bool decomposed) {
    mfds::Graph g = load_graph(o);
    mfds::DensityFunction df = mfds::parse_density(o.density);
    mfds::SolveOptions opt = solver_options(o);
    mfds::SolveResult r = decomposed ? mfds::solve(g, df, opt) : mfds::solve_bnb_only(g, df, opt);
    emit(o, result_json(g, r));
    return r.complete ? 0 : 2;
}

int run_heuristic(const CommonOpts& o) {
    mfds::Graph g = load_graph(o);
    mfds::DensityFunction df = mfds::parse_density(o.density);
    auto t0 = std::chrono::steady_clock::now();
    mfds::Solution sol = mfds::init_heuristic(g, df);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ordered_json doc;
    doc["size"] = sol.size();
    doc["vertices"] = labels_of(g, sol.members);
    doc["feasible"] = sol.feasible();
    doc["time_ms"] = ms;
    emit(o, doc);
    return 0;
}

int run_bound(const CommonOpts& o) {
    mfds::Graph g = load_graph(o);
    mfds::DensityFunction df = mfds::parse_density(o.density);
    mfds::VertexSet s(g.n()), c(g.n());
    for (int v = 0; v < g.n(); ++v) c.add(v);
    long long comp = 0;
    std::vector<int> w;
    mfds::BoundContext ctx = mfds::BoundContext::make(g, s, c, comp, w);
    ordered_json doc;
    doc["simple_bound"] = mfds::simple_bound(g, df, ctx);
    doc["sort_bound"] = mfds::sort_bound(g, df, ctx);
    emit(o, doc);
    return 0;
}

int run_oracle(const CommonOpts& o, int max_n) {
    mfds::Graph g = load_graph(o);
    mfds::DensityFunction df = mfds::parse_density(o.density);
    auto t0 = std::chrono::steady_clock::now();
    mfds::OracleResult r = mfds::brute_force(g, df, max_n);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ordered_json doc;
    doc["optimum_size"] = r.optimum_size;
    doc["vertices"] = labels_of(g, r.witness);
    doc["subsets_checked"] = r.subsets_checked;
    doc["time_ms"] = ms;
    emit(o, doc);
    return 0;
}

int run_export_mip(const CommonOpts& o) {
    mfds::Graph g = load_graph(o);
    mfds::DensityFunction df = mfds::parse_density(o.density);
    mfds::MipWindow window = mfds::compute_window(g, df);
    if (o.out.empty()) throw std::runtime_error("export-mip requires --out");
    std::ofstream out(o.out);
    if (!out) throw std::runtime_error("cannot open output file '" + o.out + "'");
    mfds::MipSummary s = mfds::export_lp(g, df, window, out);
    if (!out) throw std::runtime_error("write failure on '" + o.out + "'");
    ordered_json doc;
    doc["window"] = {{"lo", window.lo}, {"hi", window.hi}};
    doc["x_vars"] = s.x_vars;
    doc["y_vars"] = s.y_vars;
    doc["z_vars"] = s.z_vars;
    doc["rows"] = {{"dense", s.dense_rows},         {"link", s.link_rows},
                   {"cardinality", s.cardinality_rows}, {"convexity", s.convexity_rows},
                   {"dist_far", s.dist_far_rows},   {"dist_two", s.dist_two_rows}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_bench(const std::string& manifest_path, const std::string& out_json,
              const std::string& out_csv) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest '" + manifest_path + "'");
    json manifest = json::parse(in);
    if (!manifest.is_array()) throw std::runtime_error("manifest must be a JSON array of rows");

    // graph paths are resolved relative to the manifest's directory
    std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
    ordered_json rows = ordered_json::array();
    long long solved = 0, errored = 0;
    for (const auto& row : manifest) {
        ordered_json rec;
        std::string graph_path = row.value("graph", "");
        if (!graph_path.empty() && std::filesystem::path(graph_path).is_relative())
            graph_path = (base / graph_path).string();
        std::string density = row.value("density", "quasi:0.9");
        std::string mode = row.value("mode", "solve");
        std::string order = row.value("order", "deg");
        double time_limit = row.value("time_limit", 0.0);
        rec["graph"] = graph_path;
        rec["density"] = density;
        rec["mode"] = mode;
        rec["order"] = order;
        try {
            CommonOpts o;
            o.input = graph_path;
            o.density = density;
            o.order = order;
            o.time_limit = time_limit;
            mfds::Graph g = load_graph(o);
            mfds::DensityFunction df = mfds::parse_density(density);
            mfds::SolveOptions opt = solver_options(o);
            mfds::SolveResult r =
                mode == "bnb" ? mfds::solve_bnb_only(g, df, opt) : mfds::solve(g, df, opt);
            rec["status"] = r.complete ? "solved" : "timeout";
            rec["optimum_size"] = r.best.size();
            rec["nodes"] = r.stats.nodes;
            rec["alpha_G"] = r.alpha;
            rec["time_ms"] = r.total_ms;
            if (r.complete) ++solved;
        } catch (const std::exception& e) {
            rec["status"] = "error";
            rec["error"] = e.what();
            ++errored;
            log(1, "bench row failed: " + std::string(e.what()));
        }
        rows.push_back(std::move(rec));
    }

    ordered_json report;
    report["rows"] = rows;
    report["aggregate"] = {{"total", manifest.size()}, {"solved", solved}, {"errors", errored}};

    std::string text = report.dump(2) + "\n";
    if (out_json.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_json);
        if (!out) throw std::runtime_error("cannot open output file '" + out_json + "'");
        out << text;
    }
    if (!out_csv.empty()) {
        std::ofstream csv(out_csv);
        if (!csv) throw std::runtime_error("cannot open output file '" + out_csv + "'");
        csv << "graph,density,mode,order,status,optimum_size,nodes,alpha_G,time_ms\n";
        for (const auto& rec : rows) {
            csv << rec.value("graph", "") << ',' << rec.value("density", "") << ','
                << rec.value("mode", "") << ',' << rec.value("order", "") << ','
                << rec.value("status", "") << ',' << rec.value("optimum_size", 0LL) << ','
                << rec.value("nodes", 0LL) << ',' << rec.value("alpha_G", 0LL) << ','
                << rec.value("time_ms", 0.0) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    init_logging();
    CLI::App app{"exact maximum low-diameter f-dense subgraph solver"};
    app.require_subcommand(1);

    CommonOpts o;
    int max_n = 20;
    std::string manifest, bench_csv;

    auto* solve_cmd = app.add_subcommand("solve", "decomposition + branch-and-bound (exact)");
    add_graph_opts(solve_cmd, o);
    add_density_opt(solve_cmd, o);
    solve_cmd->add_option("--order", o.order, "vertex ordering: deg|twohop|input (default deg)")
        ->check(CLI::IsMember({"deg", "twohop", "input"}));
    add_solver_opts(solve_cmd, o);
    add_out_opt(solve_cmd, o);

    auto* bnb_cmd = app.add_subcommand("bnb", "branch-and-bound without decomposition");
    add_graph_opts(bnb_cmd, o);
    add_density_opt(bnb_cmd, o);
    add_solver_opts(bnb_cmd, o);
    add_out_opt(bnb_cmd, o);

    auto* heur_cmd = app.add_subcommand("heuristic", "initial feasible solution only");
    add_graph_opts(heur_cmd, o);
    add_density_opt(heur_cmd, o);
    add_out_opt(heur_cmd, o);

    auto* bound_cmd = app.add_subcommand("bound", "root upper bounds (S empty, C = V)");
    add_graph_opts(bound_cmd, o);
    add_density_opt(bound_cmd, o);
    add_out_opt(bound_cmd, o);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth (small graphs)");
    add_graph_opts(oracle_cmd, o);
    add_density_opt(oracle_cmd, o);
    oracle_cmd->add_option("--max-n", max_n, "refuse graphs larger than this (default 20)");
    add_out_opt(oracle_cmd, o);

    auto* mip_cmd = app.add_subcommand("export-mip", "write the MIP model in LP format");
    add_graph_opts(mip_cmd, o);
    add_density_opt(mip_cmd, o);
    mip_cmd->add_option("-o,--out", o.out, "LP file to write")->required();

    auto* bench_cmd = app.add_subcommand("bench", "run a manifest of solver rows");
    bench_cmd->add_option("manifest", manifest, "JSON array of {graph, density, mode, order, time_limit}")
        ->required();
    bench_cmd->add_option("-o,--out", o.out, "write the JSON report here");
    bench_cmd->add_option("--csv", bench_csv, "also write a CSV report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve(o, true);
        if (bnb_cmd->parsed()) return run_solve(o, false);
        if (heur_cmd->parsed()) return run_heuristic(o);
        if (bound_cmd->parsed()) return run_bound(o);
        if (oracle_cmd->parsed()) return run_oracle(o, max_n);
        if (mip_cmd->parsed()) return run_export_mip(o);
        if (bench_cmd->parsed()) return run_bench(manifest, o.out, bench_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
