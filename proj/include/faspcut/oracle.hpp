#pragma once

#include <optional>
#include <set>

#include "cycles.hpp"

namespace faspcut {

struct OracleResult {
    double optimum = 0;
    std::vector<ArcId> one_solution;  // ascending (vertex ids for the FVSP variant)
    std::optional<std::vector<std::vector<ArcId>>> all_solutions;
};

struct OracleBudget {
    long node_limit = 1000000;
};

namespace detail {

struct FasSearch {
    const ArcWeights& w;
    long nodes_left;
    bool enumerate_all;
    double best = std::numeric_limits<double>::infinity();
    std::vector<ArcId> best_set;
    std::set<std::vector<ArcId>> all;

    void run(MultiDigraph& g, std::vector<ArcId>& chosen, double acc) {
        if (--nodes_left < 0) throw ResourceError("exact_fas: node budget exceeded");
        if (enumerate_all ? acc > best + kWeightTol : acc > best - kWeightTol) return;

        auto cycle = find_elementary_cycle(g);
        if (!cycle) {
            if (acc < best - kWeightTol) {
                best = acc;
                best_set = chosen;
                std::sort(best_set.begin(), best_set.end());
                if (enumerate_all) all.clear();
            }
            if (enumerate_all && acc < best + kWeightTol) {
                std::vector<ArcId> sorted = chosen;
                std::sort(sorted.begin(), sorted.end());
                all.insert(std::move(sorted));
            }
            return;
        }

        // branch over the distinct bundles of the cycle; every minimum
        // feedback set contains the full bundle of any arc it contains, so
        // bundle branching is exhaustive over minima. Infinite-weight bundles
        // are skipped whenever the cycle offers a finite arc.
        std::vector<std::vector<ArcId>> bundles;
        std::set<ArcId> covered;
        bool has_finite = false;
        for (ArcId e : cycle->arcs)
            if (!w.is_infinite(e)) { has_finite = true; break; }
        for (ArcId e : cycle->arcs) {
            if (covered.count(e)) continue;
            if (has_finite && w.is_infinite(e)) continue;
            std::vector<ArcId> b = parallel_bundle(g, e);
            covered.insert(b.begin(), b.end());
            bundles.push_back(std::move(b));
        }
        for (const auto& bundle : bundles) {
            double bw = w.total(bundle);
            for (ArcId e : bundle) { g.remove_arc(e); chosen.push_back(e); }
            run(g, chosen, acc + bw);
            for (std::size_t i = 0; i < bundle.size(); ++i) chosen.pop_back();
            for (ArcId e : bundle) g.restore_arc(e);
        }
    }
};

struct FvsSearch {
    const VertexWeights& psi;
    long nodes_left;
    bool enumerate_all;
    double best = std::numeric_limits<double>::infinity();
    std::vector<VertexId> best_set;
    std::set<std::vector<VertexId>> all;

    void run(MultiDigraph& g, std::vector<VertexId>& chosen, double acc) {
        if (--nodes_left < 0) throw ResourceError("exact_fvs: node budget exceeded");
        if (enumerate_all ? acc > best + kWeightTol : acc > best - kWeightTol) return;

        auto cycle = find_elementary_cycle(g);
        if (!cycle) {
            if (acc < best - kWeightTol) {
                best = acc;
                best_set = chosen;
                std::sort(best_set.begin(), best_set.end());
                if (enumerate_all) all.clear();
            }
            if (enumerate_all && acc < best + kWeightTol) {
                std::vector<VertexId> sorted = chosen;
                std::sort(sorted.begin(), sorted.end());
                all.insert(std::move(sorted));
            }
            return;
        }

        std::vector<VertexId> verts;
        for (ArcId e : cycle->arcs) verts.push_back(g.tail(e));
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (VertexId v : verts) {
            std::vector<ArcId> removed = g.remove_vertex(v);
            chosen.push_back(v);
            run(g, chosen, acc + psi[v]);
            chosen.pop_back();
            g.restore_vertex(v, removed);
        }
    }
};

}  // namespace detail

/// Exact FASP by branch-and-bound over cycle bundles; desk-scale ground truth.
inline OracleResult exact_fas(const MultiDigraph& g, const ArcWeights& w,
                              OracleBudget budget = {}, bool enumerate_all = false) {
    detail::FasSearch search{w, budget.node_limit, enumerate_all};
    MultiDigraph work = g;
    std::vector<ArcId> chosen;
    search.run(work, chosen, 0.0);
    OracleResult res;
    res.optimum = search.best;
    res.one_solution = search.best_set;
    if (enumerate_all)
        res.all_solutions = std::vector<std::vector<ArcId>>(search.all.begin(), search.all.end());
    return res;
}

/// Exact FVSP by branch-and-bound over cycle vertices.
inline OracleResult exact_fvs(const MultiDigraph& g, const VertexWeights& psi,
                              OracleBudget budget = {}, bool enumerate_all = false) {
    detail::FvsSearch search{psi, budget.node_limit, enumerate_all};
    MultiDigraph work = g;
    std::vector<VertexId> chosen;
    search.run(work, chosen, 0.0);
    OracleResult res;
    res.optimum = search.best;
    res.one_solution = search.best_set;
    if (enumerate_all)
        res.all_solutions = std::vector<std::vector<VertexId>>(search.all.begin(), search.all.end());
    return res;
}

/// Greedy Removal baseline: build a linear arrangement by repeatedly peeling
/// sinks to the back and sources to the front, otherwise moving the vertex
/// with maximum outdegree - indegree to the front; the feedback arcs are the
/// arcs pointing backward in the arrangement. Unweighted semantics.
inline std::vector<ArcId> greedy_removal(const MultiDigraph& g) {
    std::vector<ArcId> result;
    MultiDigraph cur = g;
    for (ArcId e = 0; e < g.arc_capacity(); ++e)
        if (g.arc_alive(e) && g.is_loop(e)) { result.push_back(e); cur.remove_arc(e); }

    auto degrees = [&](VertexId v, int& outd, int& ind) {
        outd = ind = 0;
        for (ArcId e : cur.out_raw(v)) if (cur.arc_alive(e)) ++outd;
        for (ArcId e : cur.in_raw(v)) if (cur.arc_alive(e)) ++ind;
    };

    std::vector<VertexId> front, back;
    while (cur.num_vertices() > 0) {
        bool peeled = true;
        while (peeled) {
            peeled = false;
            for (VertexId v = 0; v < cur.vertex_capacity(); ++v) {
                if (!cur.vertex_alive(v)) continue;
                int outd, ind;
                degrees(v, outd, ind);
                if (outd == 0) { back.push_back(v); cur.remove_vertex(v); peeled = true; }
            }
            for (VertexId v = 0; v < cur.vertex_capacity(); ++v) {
                if (!cur.vertex_alive(v)) continue;
                int outd, ind;
                degrees(v, outd, ind);
                if (ind == 0) { front.push_back(v); cur.remove_vertex(v); peeled = true; }
            }
        }
        if (cur.num_vertices() == 0) break;
        VertexId pick = kNoVertex;
        int best = std::numeric_limits<int>::min();
        for (VertexId v = 0; v < cur.vertex_capacity(); ++v) {
            if (!cur.vertex_alive(v)) continue;
            int outd, ind;
            degrees(v, outd, ind);
            if (outd - ind > best) { best = outd - ind; pick = v; }
        }
        front.push_back(pick);
        cur.remove_vertex(pick);
    }

    std::vector<int> pos(g.vertex_capacity(), 0);
    int p = 0;
    for (VertexId v : front) pos[v] = p++;
    for (auto it = back.rbegin(); it != back.rend(); ++it) pos[*it] = p++;
    for (ArcId e = 0; e < g.arc_capacity(); ++e) {
        if (!g.arc_alive(e) || g.is_loop(e)) continue;
        if (pos[g.head(e)] < pos[g.tail(e)]) result.push_back(e);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

}  // namespace faspcut
