#pragma once

#include <json.hpp>

#include "io.hpp"
#include "oracle.hpp"
#include "reductions.hpp"

namespace faspcut {

struct BenchConfig {
    std::string family = "planted";
    std::vector<int> sizes;           // |V| grid
    int instances_per_cell = 10;
    std::uint64_t seed = 0;
    std::vector<std::string> algos = {"tightcut-star", "gr"};  // tightcut | tightcut-star | gr | exact
    double timeout_seconds = 60;

    // family parameters
    double arc_probability = 0.05;   // erdos-renyi p / perturbed-planar rewire fraction
    double arcs_per_vertex = 3.0;    // planted: |E| = round(this * |V|) ...
    double density = 0;              // ... unless density > 0, then |E| = round(density * |V|^2)
    int planted_k = 20;
    bool weighted = false;

    long oracle_budget = 0;          // > 0: establish ground truth via exact_fas when not planted
    SolverConfig solver;             // seed/deadline fields are managed per solve
};

struct BenchRow {
    int instance_id = 0;
    std::string family;
    std::uint64_t seed = 0;
    int n_vertices = 0;
    int n_arcs = 0;
    std::optional<double> truth;              // planted or oracle optimum
    std::map<std::string, double> weight;     // algo -> feedback weight
    std::map<std::string, double> ratio;      // algo -> weight / truth
    std::map<std::string, bool> timed_out;    // algo -> hit the per-solve deadline
    std::map<std::string, double> wall_ms;    // CSV only; excluded from JSON for reproducibility
};

struct BenchAggregate {
    double median_ratio = 0;
    double p95_ratio = 0;
    double exact_fraction = 0;  // share of rows solved to ratio 1
    int rows_with_truth = 0;
};

struct BenchmarkReport {
    BenchConfig config;
    std::vector<BenchRow> rows;
    std::map<std::string, BenchAggregate> aggregates;  // per algo
};

namespace detail {

inline Instance make_instance(const BenchConfig& cfg, int n, std::uint64_t seed) {
    if (cfg.family == "erdos-renyi") return gen_erdos_renyi(n, cfg.arc_probability, seed);
    if (cfg.family == "tournament") return gen_tournament(n, seed);
    if (cfg.family == "perturbed-planar") return gen_perturbed_planar(n, cfg.arc_probability, seed);
    if (cfg.family == "planted") {
        long m = cfg.density > 0
                     ? std::lround(cfg.density * double(n) * double(n))
                     : std::lround(cfg.arcs_per_vertex * double(n));
        return gen_planted(n, static_cast<int>(m), cfg.planted_k, cfg.weighted, seed);
    }
    throw std::domain_error("unknown instance family: " + cfg.family);
}

inline double percentile(std::vector<double> xs, double q) {
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());
    double idx = q * (xs.size() - 1);
    std::size_t lo = static_cast<std::size_t>(idx);
    std::size_t hi = std::min(lo + 1, xs.size() - 1);
    double frac = idx - double(lo);
    return xs[lo] * (1 - frac) + xs[hi] * frac;
}

}  // namespace detail

/// Runs one algorithm on one instance under a wall deadline. Returns the
/// feedback weight, or nullopt on timeout/budget exhaustion.
inline std::optional<double> bench_solve(const std::string& algo, const Instance& inst,
                                         const SolverConfig& solver_cfg, long oracle_budget) {
    try {
        if (algo == "tightcut") return tight_cut(inst.graph, inst.weights, solver_cfg).total_weight;
        if (algo == "tightcut-star")
            return tight_cut_star(inst.graph, inst.weights, solver_cfg).total_weight;
        if (algo == "gr") return inst.weights.total(greedy_removal(inst.graph));
        if (algo == "exact")
            return exact_fas(inst.graph, inst.weights,
                             {oracle_budget > 0 ? oracle_budget : 1000000}).optimum;
        throw std::domain_error("unknown algorithm: " + algo);
    } catch (const TimeoutError&) {
        return std::nullopt;
    } catch (const ResourceError&) {
        return std::nullopt;
    }
}

inline BenchmarkReport run_bench(const BenchConfig& cfg) {
    BenchmarkReport report;
    report.config = cfg;
    int instance_id = 0;
    for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
        for (int rep = 0; rep < cfg.instances_per_cell; ++rep) {
            std::uint64_t seed = derive_seed(cfg.seed, si, static_cast<std::uint64_t>(rep));
            Instance inst = detail::make_instance(cfg, cfg.sizes[si], seed);
            BenchRow row;
            row.instance_id = instance_id++;
            row.family = inst.family;
            row.seed = seed;
            row.n_vertices = inst.graph.num_vertices();
            row.n_arcs = inst.graph.num_arcs();
            row.truth = inst.planted_optimum;
            if (!row.truth && cfg.oracle_budget > 0) {
                try {
                    row.truth = exact_fas(inst.graph, inst.weights, {cfg.oracle_budget}).optimum;
                } catch (const ResourceError&) {
                }
            }
            for (const std::string& algo : cfg.algos) {
                SolverConfig sc = cfg.solver;
                sc.rng_seed = seed;
                if (cfg.timeout_seconds > 0)
                    sc.deadline = std::chrono::steady_clock::now() +
                                  std::chrono::milliseconds(long(cfg.timeout_seconds * 1000));
                auto t0 = std::chrono::steady_clock::now();
                std::optional<double> w = bench_solve(algo, inst, sc, cfg.oracle_budget);
                auto t1 = std::chrono::steady_clock::now();
                row.wall_ms[algo] =
                    std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;
                if (!w) {
                    row.timed_out[algo] = true;
                    continue;
                }
                row.timed_out[algo] = false;
                row.weight[algo] = *w;
                if (row.truth && *row.truth > kWeightTol) row.ratio[algo] = *w / *row.truth;
            }
            report.rows.push_back(std::move(row));
        }
    }
    for (const std::string& algo : cfg.algos) {
        BenchAggregate agg;
        std::vector<double> ratios;
        for (const BenchRow& row : report.rows) {
            auto it = row.ratio.find(algo);
            if (it == row.ratio.end()) continue;
            ratios.push_back(it->second);
            if (it->second <= 1 + kWeightTol) agg.exact_fraction += 1;
        }
        agg.rows_with_truth = static_cast<int>(ratios.size());
        if (!ratios.empty()) {
            agg.exact_fraction /= double(ratios.size());
            agg.median_ratio = detail::percentile(ratios, 0.5);
            agg.p95_ratio = detail::percentile(ratios, 0.95);
        }
        report.aggregates[algo] = agg;
    }
    return report;
}

/// Machine-readable report. Wall times are deliberately excluded so that two
/// runs with identical seeds serialize byte-identically; timings live in the
/// CSV companion.
inline nlohmann::ordered_json bench_report_json(const BenchmarkReport& report) {
    nlohmann::ordered_json j;
    j["family"] = report.config.family;
    j["seed"] = report.config.seed;
    j["sizes"] = report.config.sizes;
    j["instancesPerCell"] = report.config.instances_per_cell;
    j["algos"] = report.config.algos;
    j["rows"] = nlohmann::ordered_json::array();
    for (const BenchRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["instanceId"] = row.instance_id;
        r["family"] = row.family;
        r["seed"] = row.seed;
        r["nVertices"] = row.n_vertices;
        r["nArcs"] = row.n_arcs;
        if (row.truth) r["truth"] = *row.truth;
        for (const auto& [algo, w] : row.weight) r["weight"][algo] = w;
        for (const auto& [algo, x] : row.ratio) r["ratio"][algo] = x;
        for (const auto& [algo, t] : row.timed_out)
            if (t) r["timedOut"].push_back(algo);
        j["rows"].push_back(std::move(r));
    }
    for (const auto& [algo, agg] : report.aggregates) {
        nlohmann::ordered_json a;
        a["medianRatio"] = agg.median_ratio;
        a["p95Ratio"] = agg.p95_ratio;
        a["exactFraction"] = agg.exact_fraction;
        a["rowsWithTruth"] = agg.rows_with_truth;
        j["aggregates"][algo] = std::move(a);
    }
    return j;
}

inline void bench_report_csv(std::ostream& out, const BenchmarkReport& report) {
    out << "instanceId,family,seed,nVertices,nArcs,truth";
    for (const std::string& algo : report.config.algos)
        out << ',' << algo << "Weight," << algo << "Ratio," << algo << "TimedOut,"
            << algo << "WallMs";
    out << '\n';
    for (const BenchRow& row : report.rows) {
        out << row.instance_id << ',' << row.family << ',' << row.seed << ','
            << row.n_vertices << ',' << row.n_arcs << ',';
        if (row.truth) out << format_weight(*row.truth);
        for (const std::string& algo : report.config.algos) {
            out << ',';
            if (auto it = row.weight.find(algo); it != row.weight.end())
                out << format_weight(it->second);
            out << ',';
            if (auto it = row.ratio.find(algo); it != row.ratio.end())
                out << format_weight(it->second);
            out << ',';
            if (auto it = row.timed_out.find(algo); it != row.timed_out.end())
                out << (it->second ? 1 : 0);
            out << ',';
            if (auto it = row.wall_ms.find(algo); it != row.wall_ms.end()) out << it->second;
        }
        out << '\n';
    }
}

}  // namespace faspcut
