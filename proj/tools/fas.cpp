// fas: feedback arc/vertex set toolbox.
//
// Subcommands:
//   solve   run a solver on a graph file, print the feedback set
//   bench   run a benchmark grid, emit CSV/JSON reports
//   gen     generate a benchmark instance family member
//   reduce  emit the line graph or dual digraph of an instance

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "faspcut/bench.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitResource = 3;

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("FAS_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

struct SolveOptions {
    std::string input;
    std::string weights_path;
    std::string algo = "tightcut-star";
    int n = 3;
    int N = 20;
    std::uint64_t seed = 0;
    bool fvsp = false;
    bool json = false;
    long budget = 1000000;
};

int run_solve(const SolveOptions& opt) {
    faspcut::GraphFile gf = faspcut::read_graph_file(opt.input);
    faspcut::SolverConfig cfg;
    cfg.relax_sample_size = opt.n;
    cfg.relax_sample_count = opt.N;
    cfg.rng_seed = effective_seed(opt.seed);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> solution;  // arc ids, or vertex ids in fvsp mode
    double total = 0, guess = 0;

    if (opt.fvsp) {
        faspcut::VertexWeights psi = faspcut::VertexWeights::uniform(gf.graph);
        if (!opt.weights_path.empty()) {
            std::ifstream win(opt.weights_path);
            if (!win) throw faspcut::ParseError("cannot open " + opt.weights_path);
            psi = faspcut::read_vertex_weights(win, gf.graph);
        }
        if (opt.algo == "exact") {
            faspcut::OracleResult r = faspcut::exact_fvs(gf.graph, psi, {opt.budget});
            solution = r.one_solution;
            total = r.optimum;
        } else if (opt.algo == "tightcut" || opt.algo == "tightcut-star") {
            faspcut::DualGraphResult dual = faspcut::dual_graph(gf.graph, psi);
            faspcut::FeedbackResult r = opt.algo == "tightcut"
                                            ? faspcut::tight_cut(dual.graph, dual.omega, cfg)
                                            : faspcut::tight_cut_star(dual.graph, dual.omega, cfg);
            for (faspcut::ArcId a : r.feedback_arcs) {
                faspcut::VertexId v = dual.source_vertex_of_f.at(a);
                if (v == faspcut::kNoVertex)
                    throw std::runtime_error("dual solve cut an infinite-weight arc");
                solution.push_back(v);
                total += psi[v];
            }
            std::sort(solution.begin(), solution.end());
            guess = r.guess_weight;
        } else {
            throw CLI::ValidationError("--algo", "fvsp mode supports tightcut, tightcut-star, exact");
        }
    } else {
        if (!opt.weights_path.empty()) {
            std::ifstream win(opt.weights_path);
            if (!win) throw faspcut::ParseError("cannot open " + opt.weights_path);
            faspcut::apply_arc_weights(win, gf.graph, gf.weights);
        }
        if (opt.algo == "gr") {
            solution = faspcut::greedy_removal(gf.graph);
            total = gf.weights.total(solution);
        } else if (opt.algo == "exact") {
            faspcut::OracleResult r = faspcut::exact_fas(gf.graph, gf.weights, {opt.budget});
            solution = r.one_solution;
            total = r.optimum;
        } else if (opt.algo == "tightcut" || opt.algo == "tightcut-star") {
            faspcut::FeedbackResult r = opt.algo == "tightcut"
                                            ? faspcut::tight_cut(gf.graph, gf.weights, cfg)
                                            : faspcut::tight_cut_star(gf.graph, gf.weights, cfg);
            solution = r.feedback_arcs;
            total = r.total_weight;
            guess = r.guess_weight;
        } else {
            throw CLI::ValidationError("--algo", "unknown algorithm " + opt.algo);
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    double wall_ms = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;

    if (opt.json) {
        nlohmann::ordered_json j;
        j["algo"] = opt.algo;
        j["mode"] = opt.fvsp ? "fvsp" : "fasp";
        j["weight"] = total;
        j["guessWeight"] = guess;
        j[opt.fvsp ? "feedbackVertices" : "feedbackArcs"] = solution;
        j["wallMs"] = wall_ms;
        std::cout << j.dump(2) << '\n';
    } else {
        faspcut::write_solution(std::cout, solution, total);
        std::cerr << "# guessWeight " << faspcut::format_weight(guess) << '\n'
                  << "# wallMs " << wall_ms << '\n';
    }
    return 0;
}

struct GenOptions {
    std::string family = "planted";
    int n = 100;
    int m = 300;
    int k = 20;
    double p = 0.05;
    bool weighted = false;
    std::uint64_t seed = 0;
    std::string output;
};

int run_gen(const GenOptions& opt) {
    std::uint64_t seed = effective_seed(opt.seed);
    faspcut::Instance inst;
    if (opt.family == "erdos-renyi") inst = faspcut::gen_erdos_renyi(opt.n, opt.p, seed);
    else if (opt.family == "tournament") inst = faspcut::gen_tournament(opt.n, seed);
    else if (opt.family == "perturbed-planar")
        inst = faspcut::gen_perturbed_planar(opt.n, opt.p, seed);
    else if (opt.family == "planted")
        inst = faspcut::gen_planted(opt.n, opt.m, opt.k, opt.weighted, seed);
    else throw CLI::ValidationError("--family", "unknown family " + opt.family);

    nlohmann::ordered_json sidecar;
    sidecar["family"] = inst.family;
    sidecar["seed"] = inst.seed;
    for (const auto& [key, value] : inst.params) sidecar["params"][key] = value;
    if (inst.planted_optimum) sidecar["plantedOptimum"] = *inst.planted_optimum;

    if (opt.output.empty()) {
        faspcut::write_graph(std::cout, inst.graph, &inst.weights);
        std::cerr << sidecar.dump(2) << '\n';
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::runtime_error("cannot write " + opt.output);
        faspcut::write_graph(out, inst.graph, &inst.weights);
        std::ofstream side(opt.output + ".json");
        side << sidecar.dump(2) << '\n';
    }
    return 0;
}

struct BenchOptions {
    faspcut::BenchConfig cfg;
    std::string json_out;
    std::string csv_out;
};

int run_bench_cmd(BenchOptions& opt) {
    opt.cfg.seed = effective_seed(opt.cfg.seed);
    faspcut::BenchmarkReport report = faspcut::run_bench(opt.cfg);
    if (!opt.json_out.empty()) {
        std::ofstream out(opt.json_out);
        if (!out) throw std::runtime_error("cannot write " + opt.json_out);
        out << faspcut::bench_report_json(report).dump(2) << '\n';
    }
    if (!opt.csv_out.empty()) {
        std::ofstream out(opt.csv_out);
        if (!out) throw std::runtime_error("cannot write " + opt.csv_out);
        faspcut::bench_report_csv(out, report);
    }
    for (const auto& [algo, agg] : report.aggregates)
        std::cout << algo << ": medianRatio=" << agg.median_ratio
                  << " p95Ratio=" << agg.p95_ratio
                  << " exactFraction=" << agg.exact_fraction
                  << " rowsWithTruth=" << agg.rows_with_truth << '\n';
    return 0;
}

struct ReduceOptions {
    std::string input;
    std::string mode = "dual";
    std::string weights_path;
    std::string output;
};

int run_reduce(const ReduceOptions& opt) {
    faspcut::GraphFile gf = faspcut::read_graph_file(opt.input);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) throw std::runtime_error("cannot write " + opt.output);
        out = &file;
    }
    nlohmann::ordered_json sidecar;
    if (opt.mode == "line") {
        faspcut::LineGraphResult lg = faspcut::line_graph(gf.graph, gf.weights);
        faspcut::write_graph(*out, lg.graph);
        sidecar["mode"] = "line";
        sidecar["arcOfVertex"] = lg.arc_of;
        nlohmann::ordered_json psi = nlohmann::ordered_json::array();
        for (faspcut::VertexId v = 0; v < lg.graph.vertex_capacity(); ++v)
            psi.push_back(lg.psi[v]);
        sidecar["vertexWeights"] = std::move(psi);
    } else if (opt.mode == "dual") {
        faspcut::VertexWeights psi = faspcut::VertexWeights::uniform(gf.graph);
        if (!opt.weights_path.empty()) {
            std::ifstream win(opt.weights_path);
            if (!win) throw faspcut::ParseError("cannot open " + opt.weights_path);
            psi = faspcut::read_vertex_weights(win, gf.graph);
        }
        faspcut::DualGraphResult dual = faspcut::dual_graph(gf.graph, psi);
        faspcut::write_graph(*out, dual.graph, &dual.omega);
        sidecar["mode"] = "dual";
        sidecar["fArcOfVertex"] = dual.f_arc_of;
        sidecar["dualVertexOfArc"] = dual.vertex_of_arc;
    } else {
        throw CLI::ValidationError("--mode", "expected line or dual");
    }
    if (!opt.output.empty()) {
        std::ofstream side(opt.output + ".json");
        side << sidecar.dump(2) << '\n';
    } else {
        std::cerr << sidecar.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"feedback arc/vertex set solver toolbox"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("input", solve_opt.input, "graph file (tail head [weight] per line)")
        ->required();
    solve->add_option("--weights", solve_opt.weights_path,
                      "weight override file (vertex weights in --fvsp mode, arc weights otherwise)");
    solve->add_option("--algo", solve_opt.algo, "tightcut | tightcut-star | gr | exact");
    solve->add_option("--n", solve_opt.n, "arcs deleted per relaxation probe");
    solve->add_option("--N", solve_opt.N, "relaxation probes per stall");
    solve->add_option("--seed", solve_opt.seed, "RNG seed (FAS_SEED env overrides)");
    solve->add_option("--budget", solve_opt.budget, "exact solver node budget");
    solve->add_flag("--fvsp", solve_opt.fvsp, "solve the vertex problem via the dual digraph");
    solve->add_flag("--json", solve_opt.json, "machine-readable output");

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", gen_opt.family,
                    "erdos-renyi | tournament | perturbed-planar | planted");
    gen->add_option("--nv", gen_opt.n, "vertex count");
    gen->add_option("--m", gen_opt.m, "arc count (planted)");
    gen->add_option("--k", gen_opt.k, "planted certificate cycles");
    gen->add_option("--p", gen_opt.p, "arc probability / rewire fraction");
    gen->add_flag("--weighted", gen_opt.weighted, "integer weights 1-10");
    gen->add_option("--seed", gen_opt.seed, "RNG seed (FAS_SEED env overrides)");
    gen->add_option("-o,--output", gen_opt.output, "output file (sidecar at <output>.json)");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "run a benchmark grid");
    bench->add_option("--family", bench_opt.cfg.family, "instance family");
    bench->add_option("--sizes", bench_opt.cfg.sizes, "|V| grid")->required();
    bench->add_option("--instances", bench_opt.cfg.instances_per_cell, "instances per size");
    bench->add_option("--seed", bench_opt.cfg.seed, "base seed (FAS_SEED env overrides)");
    bench->add_option("--algos", bench_opt.cfg.algos, "algorithms to compare");
    bench->add_option("--timeout", bench_opt.cfg.timeout_seconds, "per-solve wall timeout (s)");
    bench->add_option("--p", bench_opt.cfg.arc_probability, "arc probability / rewire fraction");
    bench->add_option("--arcs-per-vertex", bench_opt.cfg.arcs_per_vertex, "planted |E| / |V|");
    bench->add_option("--density", bench_opt.cfg.density, "planted |E| / |V|^2 (overrides ratio)");
    bench->add_option("--k", bench_opt.cfg.planted_k, "planted certificate cycles");
    bench->add_flag("--weighted", bench_opt.cfg.weighted, "integer weights 1-10");
    bench->add_option("--oracle-budget", bench_opt.cfg.oracle_budget,
                      "establish oracle truth under this node budget (0 = off)");
    bench->add_option("--json-out", bench_opt.json_out, "JSON report path");
    bench->add_option("--csv-out", bench_opt.csv_out, "CSV report path");

    ReduceOptions reduce_opt;
    CLI::App* reduce = app.add_subcommand("reduce", "emit line graph or dual digraph");
    reduce->add_option("input", reduce_opt.input, "graph file")->required();
    reduce->add_option("--mode", reduce_opt.mode, "line | dual");
    reduce->add_option("--weights", reduce_opt.weights_path, "vertex weights (dual mode)");
    reduce->add_option("-o,--output", reduce_opt.output, "output file (sidecar at <output>.json)");

    try {
        app.parse(argc, argv);
        if (*solve) return run_solve(solve_opt);
        if (*gen) return run_gen(gen_opt);
        if (*bench) return run_bench_cmd(bench_opt);
        if (*reduce) return run_reduce(reduce_opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const faspcut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const faspcut::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const faspcut::TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
