#pragma once

#include <span>

#include "graph.hpp"

namespace faspcut {

/// Minimum s-t cut as an arc set. `finite` is false when every cut must use an
/// INFINITE-weight arc; `value` is then the sentinel itself.
struct CutResult {
    std::vector<ArcId> cut_arcs;  // ascending
    double value = 0;
    bool finite = true;
};

namespace detail {

struct DinicEdge {
    int to;
    double cap;
    int rev;          // index of the reverse edge in adj[to]
    ArcId orig;       // kNoArc for residual counterparts
};

class Dinic {
public:
    explicit Dinic(int n) : adj_(n), level_(n), iter_(n) {}

    void add_edge(int from, int to, double cap, ArcId orig) {
        adj_[from].push_back({to, cap, static_cast<int>(adj_[to].size()), orig});
        adj_[to].push_back({from, 0.0, static_cast<int>(adj_[from].size()) - 1, kNoArc});
    }

    double max_flow(int s, int t) {
        double flow = 0;
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (double f = dfs(s, t, std::numeric_limits<double>::max()))
                flow += f;
        }
        return flow;
    }

    /// Source side of the final residual graph (the cut closest to s).
    std::vector<char> source_side(int s) const {
        std::vector<char> side(adj_.size(), 0);
        std::vector<int> stack{s};
        side[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : adj_[v])
                if (e.cap > kWeightTol && !side[e.to]) { side[e.to] = 1; stack.push_back(e.to); }
        }
        return side;
    }

private:
    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue{s};
        level_[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const auto& e : adj_[v])
                if (e.cap > kWeightTol && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    queue.push_back(e.to);
                }
        }
        return level_[t] >= 0;
    }

    double dfs(int v, int t, double limit) {
        if (v == t) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            DinicEdge& e = adj_[v][i];
            if (e.cap <= kWeightTol || level_[e.to] != level_[v] + 1) continue;
            double d = dfs(e.to, t, std::min(limit, e.cap));
            if (d > 0) {
                e.cap -= d;
                adj_[e.to][e.rev].cap += d;
                return d;
            }
        }
        return 0;
    }

    std::vector<std::vector<DinicEdge>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace detail

/// Minimum s-t cut restricted to a subset of arcs (the whole alive arc set
/// when `restrict_to` is empty and `use_restriction` is false). INFINITE
/// weights are realized as 1 + the sum of all finite weights, so an infinite
/// arc is never cut while any finite cut exists.
inline CutResult min_st_cut_on(const MultiDigraph& g, const ArcWeights& w,
                               VertexId s, VertexId t, std::span<const ArcId> arcs) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::domain_error("min_st_cut: s and t must differ");

    double finite_sum = 0;
    for (ArcId e : arcs)
        if (!w.is_infinite(e)) finite_sum += w[e];
    const double inf_cap = 1.0 + finite_sum;

    detail::Dinic dinic(g.vertex_capacity());
    for (ArcId e : arcs) {
        if (!g.arc_alive(e)) continue;
        if (g.is_loop(e)) continue;  // loops never lie on an s-t path
        dinic.add_edge(g.tail(e), g.head(e), w.is_infinite(e) ? inf_cap : w[e], e);
    }
    dinic.max_flow(s, t);

    std::vector<char> side = dinic.source_side(s);
    CutResult res;
    for (ArcId e : arcs) {
        if (!g.arc_alive(e) || g.is_loop(e)) continue;
        if (side[g.tail(e)] && !side[g.head(e)]) res.cut_arcs.push_back(e);
    }
    std::sort(res.cut_arcs.begin(), res.cut_arcs.end());
    for (ArcId e : res.cut_arcs) {
        if (w.is_infinite(e)) res.finite = false;
        res.value += w[e];
    }
    if (!res.finite) res.value = ArcWeights::kInfinite;
    return res;
}

/// Minimum s-t cut over the whole graph.
inline CutResult min_st_cut(const MultiDigraph& g, const ArcWeights& w, VertexId s, VertexId t) {
    return min_st_cut_on(g, w, s, t, g.arcs());
}

}  // namespace faspcut
