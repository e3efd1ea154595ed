#pragma once

#include <functional>

#include "solver.hpp"

namespace faspcut {

/// Directed line graph L(G): one vertex per arc of G, an arc (e,f) whenever e
/// and f are consecutive. Arc weights of G become vertex weights of L(G).
struct LineGraphResult {
    MultiDigraph graph;
    std::vector<VertexId> vertex_of;  // ArcId(G) -> VertexId(L); kNoVertex for dead arcs
    std::vector<ArcId> arc_of;        // VertexId(L) -> ArcId(G)
    VertexWeights psi;
};

inline LineGraphResult line_graph(const MultiDigraph& g, const ArcWeights& w) {
    LineGraphResult res;
    res.vertex_of.assign(g.arc_capacity(), kNoVertex);
    for (ArcId e = 0; e < g.arc_capacity(); ++e) {
        if (!g.arc_alive(e)) continue;
        VertexId v = res.graph.add_vertex();
        res.vertex_of[e] = v;
        res.arc_of.push_back(e);
        res.psi.set(v, w[e]);
    }
    for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
        if (!g.vertex_alive(v)) continue;
        for (ArcId e : g.in_raw(v)) {
            if (!g.arc_alive(e)) continue;
            for (ArcId f : g.out_raw(v)) {
                if (!g.arc_alive(f)) continue;
                res.graph.add_arc(res.vertex_of[e], res.vertex_of[f]);
            }
        }
    }
    return res;
}

/// Dual digraph G*: per original vertex v a gadget u_v -> w_v carrying the
/// only finite-weight arc f_v (weight psi(v)); incoming arcs of v feed u_v and
/// w_v feeds the outgoing arcs, all with INFINITE weight. Arc-vertices are
/// shared across gadgets, so every cycle of G corresponds to one cycle of G*.
struct DualGraphResult {
    MultiDigraph graph;
    std::vector<ArcId> f_arc_of;         // VertexId(G) -> ArcId(G*), the tau map
    std::vector<VertexId> vertex_of_arc; // ArcId(G) -> arc-vertex in G*
    std::vector<VertexId> source_vertex_of_f;  // ArcId(G*) -> VertexId(G), tau^-1 (kNoVertex elsewhere)
    ArcWeights omega;
};

inline DualGraphResult dual_graph(const MultiDigraph& g, const VertexWeights& psi) {
    DualGraphResult res;
    res.f_arc_of.assign(g.vertex_capacity(), kNoArc);
    res.vertex_of_arc.assign(g.arc_capacity(), kNoVertex);

    for (ArcId e = 0; e < g.arc_capacity(); ++e)
        if (g.arc_alive(e)) res.vertex_of_arc[e] = res.graph.add_vertex();

    auto note_arc = [&](ArcId a, double weight, VertexId orig) {
        while (static_cast<ArcId>(res.source_vertex_of_f.size()) <= a)
            res.source_vertex_of_f.push_back(kNoVertex);
        res.source_vertex_of_f[a] = orig;
        res.omega.set(a, weight);
    };

    for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
        if (!g.vertex_alive(v)) continue;
        VertexId u_v = res.graph.add_vertex();
        VertexId w_v = res.graph.add_vertex();
        ArcId f_v = res.graph.add_arc(u_v, w_v);
        res.f_arc_of[v] = f_v;
        note_arc(f_v, psi[v], v);
        for (ArcId x : g.in_raw(v)) {
            if (!g.arc_alive(x)) continue;
            note_arc(res.graph.add_arc(res.vertex_of_arc[x], u_v), ArcWeights::kInfinite, kNoVertex);
        }
        for (ArcId y : g.out_raw(v)) {
            if (!g.arc_alive(y)) continue;
            note_arc(res.graph.add_arc(w_v, res.vertex_of_arc[y]), ArcWeights::kInfinite, kNoVertex);
        }
    }
    return res;
}

struct FvspResult {
    std::vector<VertexId> feedback_vertices;  // ascending
    double total_weight = 0;
};

/// Feedback vertex sets via the dual construction: solve the FASP on
/// (G*, omega*) and pull the finite arcs back through tau.
inline FvspResult solve_fvsp(const MultiDigraph& g, const VertexWeights& psi,
                             const SolverConfig& cfg = {}) {
    DualGraphResult dual = dual_graph(g, psi);
    FeedbackResult fas = tight_cut_star(dual.graph, dual.omega, cfg);
    FvspResult res;
    for (ArcId a : fas.feedback_arcs) {
        VertexId v = dual.source_vertex_of_f.at(a);
        if (v == kNoVertex)
            throw std::runtime_error("solve_fvsp: solver cut an infinite-weight arc");
        res.feedback_vertices.push_back(v);
        res.total_weight += psi[v];
    }
    std::sort(res.feedback_vertices.begin(), res.feedback_vertices.end());
    return res;
}

/// Cross-validation path: FASP on G answered by an FVSP solver run on the
/// line graph, pulled back through rho. Not a production route.
inline std::vector<ArcId> solve_fasp_via_line_graph(
    const MultiDigraph& g, const ArcWeights& w,
    const std::function<std::vector<VertexId>(const MultiDigraph&, const VertexWeights&)>& fvsp_solver) {
    LineGraphResult lg = line_graph(g, w);
    std::vector<VertexId> nu = fvsp_solver(lg.graph, lg.psi);
    std::vector<ArcId> eps;
    for (VertexId v : nu) eps.push_back(lg.arc_of.at(v));
    std::sort(eps.begin(), eps.end());
    return eps;
}

}  // namespace faspcut
