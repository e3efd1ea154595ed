#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace faspcut {

using VertexId = int;
using ArcId = int;

inline constexpr VertexId kNoVertex = -1;
inline constexpr ArcId kNoArc = -1;
inline constexpr double kWeightTol = 1e-9;

/// Multi-digraph with identity-preserving parallel arcs and loops.
///
/// Vertex and arc ids are dense integers assigned at insertion time and stay
/// stable under deletion (deletion tombstones the id instead of reusing it).
/// Canonical iteration order is ascending id everywhere; all solver loops rely
/// on that for reproducibility. A graph value is treated as immutable once
/// built; mutating workflows copy first (copies are plain value copies).
class MultiDigraph {
public:
    MultiDigraph() = default;

    explicit MultiDigraph(int n_vertices) { ensure_vertex(n_vertices - 1); }

    VertexId add_vertex() {
        VertexId v = static_cast<VertexId>(vertex_alive_.size());
        vertex_alive_.push_back(true);
        out_.emplace_back();
        in_.emplace_back();
        ++n_alive_vertices_;
        return v;
    }

    /// Grows the vertex set so that id v exists (ids 0..v all valid).
    void ensure_vertex(VertexId v) {
        while (static_cast<VertexId>(vertex_alive_.size()) <= v) add_vertex();
    }

    ArcId add_arc(VertexId tail, VertexId head) {
        check_vertex(tail);
        check_vertex(head);
        ArcId e = static_cast<ArcId>(tail_.size());
        tail_.push_back(tail);
        head_.push_back(head);
        arc_alive_.push_back(true);
        out_[tail].push_back(e);
        in_[head].push_back(e);
        ++n_alive_arcs_;
        return e;
    }

    void remove_arc(ArcId e) {
        check_arc(e);
        arc_alive_[e] = false;
        --n_alive_arcs_;
    }

    /// Revives a tombstoned arc. Endpoints must still be alive.
    void restore_arc(ArcId e) {
        if (e < 0 || e >= arc_capacity() || arc_alive_[e])
            throw std::domain_error("restore_arc: arc " + std::to_string(e) + " is not removed");
        if (!vertex_alive_[tail_[e]] || !vertex_alive_[head_[e]])
            throw std::domain_error("restore_arc: endpoint of arc " + std::to_string(e) + " is removed");
        arc_alive_[e] = true;
        ++n_alive_arcs_;
    }

    /// Removes v and all incident alive arcs; returns the removed arcs so the
    /// caller can undo the deletion with restore_vertex.
    std::vector<ArcId> remove_vertex(VertexId v) {
        check_vertex(v);
        std::vector<ArcId> removed;
        for (ArcId e : out_[v])
            if (arc_alive_[e]) { arc_alive_[e] = false; --n_alive_arcs_; removed.push_back(e); }
        for (ArcId e : in_[v])
            if (arc_alive_[e] && tail_[e] != v) { arc_alive_[e] = false; --n_alive_arcs_; removed.push_back(e); }
        vertex_alive_[v] = false;
        --n_alive_vertices_;
        return removed;
    }

    void restore_vertex(VertexId v, const std::vector<ArcId>& removed_arcs) {
        if (v < 0 || v >= vertex_capacity() || vertex_alive_[v])
            throw std::domain_error("restore_vertex: vertex is not removed");
        vertex_alive_[v] = true;
        ++n_alive_vertices_;
        for (ArcId e : removed_arcs) restore_arc(e);
    }

    int vertex_capacity() const { return static_cast<int>(vertex_alive_.size()); }
    int arc_capacity() const { return static_cast<int>(arc_alive_.size()); }
    int num_vertices() const { return n_alive_vertices_; }
    int num_arcs() const { return n_alive_arcs_; }

    bool vertex_alive(VertexId v) const {
        return v >= 0 && v < vertex_capacity() && vertex_alive_[v];
    }
    bool arc_alive(ArcId e) const {
        return e >= 0 && e < arc_capacity() && arc_alive_[e];
    }

    VertexId tail(ArcId e) const { check_arc_id(e); return tail_[e]; }
    VertexId head(ArcId e) const { check_arc_id(e); return head_[e]; }
    bool is_loop(ArcId e) const { check_arc_id(e); return tail_[e] == head_[e]; }

    /// All arcs ever inserted at v, dead ones included; filter with arc_alive.
    const std::vector<ArcId>& out_raw(VertexId v) const { check_vertex_id(v); return out_[v]; }
    const std::vector<ArcId>& in_raw(VertexId v) const { check_vertex_id(v); return in_[v]; }

    std::vector<ArcId> arcs() const {
        std::vector<ArcId> res;
        res.reserve(n_alive_arcs_);
        for (ArcId e = 0; e < arc_capacity(); ++e)
            if (arc_alive_[e]) res.push_back(e);
        return res;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> res;
        res.reserve(n_alive_vertices_);
        for (VertexId v = 0; v < vertex_capacity(); ++v)
            if (vertex_alive_[v]) res.push_back(v);
        return res;
    }

    void check_vertex(VertexId v) const {
        if (!vertex_alive(v))
            throw std::domain_error("unknown vertex id " + std::to_string(v));
    }
    void check_arc(ArcId e) const {
        if (!arc_alive(e))
            throw std::domain_error("unknown arc id " + std::to_string(e));
    }

private:
    // id-range checks for accessors that tolerate tombstoned ids
    void check_vertex_id(VertexId v) const {
        if (v < 0 || v >= vertex_capacity())
            throw std::domain_error("vertex id out of range: " + std::to_string(v));
    }
    void check_arc_id(ArcId e) const {
        if (e < 0 || e >= arc_capacity())
            throw std::domain_error("arc id out of range: " + std::to_string(e));
    }

    std::vector<VertexId> tail_, head_;
    std::vector<char> arc_alive_;
    std::vector<char> vertex_alive_;
    std::vector<std::vector<ArcId>> out_, in_;
    int n_alive_vertices_ = 0;
    int n_alive_arcs_ = 0;
};

/// Positive arc weights with an INFINITE sentinel used by the dual construction.
class ArcWeights {
public:
    static constexpr double kInfinite = std::numeric_limits<double>::infinity();

    ArcWeights() = default;
    explicit ArcWeights(int arc_capacity, double value = 1.0) : w_(arc_capacity, value) {
        if (!(value > 0)) throw std::domain_error("arc weights must be positive");
    }

    static ArcWeights uniform(const MultiDigraph& g, double value = 1.0) {
        return ArcWeights(g.arc_capacity(), value);
    }

    double operator[](ArcId e) const { return w_.at(e); }

    void set(ArcId e, double value) {
        if (!(value > 0)) throw std::domain_error("arc weights must be positive");
        if (e >= static_cast<ArcId>(w_.size())) w_.resize(e + 1, 1.0);
        w_[e] = value;
    }

    void push_back(double value) {
        if (!(value > 0)) throw std::domain_error("arc weights must be positive");
        w_.push_back(value);
    }

    bool is_infinite(ArcId e) const { return std::isinf(w_.at(e)); }
    int size() const { return static_cast<int>(w_.size()); }

    template <typename Range>
    double total(const Range& arcs) const {
        double s = 0;
        for (ArcId e : arcs) s += w_.at(e);
        return s;
    }

    /// Sum of all finite weights over alive arcs; basis of the INFINITE
    /// realization (1 + this sum) used by the min-cut engine.
    double finite_total(const MultiDigraph& g) const {
        double s = 0;
        for (ArcId e = 0; e < g.arc_capacity(); ++e)
            if (g.arc_alive(e) && !is_infinite(e)) s += w_.at(e);
        return s;
    }

private:
    std::vector<double> w_;
};

/// Positive vertex weights (FVSP side).
class VertexWeights {
public:
    VertexWeights() = default;
    explicit VertexWeights(int vertex_capacity, double value = 1.0) : w_(vertex_capacity, value) {
        if (!(value > 0)) throw std::domain_error("vertex weights must be positive");
    }

    static VertexWeights uniform(const MultiDigraph& g, double value = 1.0) {
        return VertexWeights(g.vertex_capacity(), value);
    }

    double operator[](VertexId v) const { return w_.at(v); }

    void set(VertexId v, double value) {
        if (!(value > 0)) throw std::domain_error("vertex weights must be positive");
        if (v >= static_cast<VertexId>(w_.size())) w_.resize(v + 1, 1.0);
        w_[v] = value;
    }

    int size() const { return static_cast<int>(w_.size()); }

    template <typename Range>
    double total(const Range& verts) const {
        double s = 0;
        for (VertexId v : verts) s += w_.at(v);
        return s;
    }

private:
    std::vector<double> w_;
};

/// F->(e): all arcs parallel to e, e included.
inline std::vector<ArcId> parallel_bundle(const MultiDigraph& g, ArcId e) {
    g.check_arc(e);
    std::vector<ArcId> res;
    for (ArcId f : g.out_raw(g.tail(e)))
        if (g.arc_alive(f) && g.head(f) == g.head(e)) res.push_back(f);
    std::sort(res.begin(), res.end());
    return res;
}

/// F<-(e): all arcs anti-parallel to e.
inline std::vector<ArcId> antiparallel_bundle(const MultiDigraph& g, ArcId e) {
    g.check_arc(e);
    std::vector<ArcId> res;
    for (ArcId f : g.out_raw(g.head(e)))
        if (g.arc_alive(f) && g.head(f) == g.tail(e)) res.push_back(f);
    std::sort(res.begin(), res.end());
    return res;
}

/// Kahn topological sort over the alive subgraph; loops count as cycles.
inline bool is_acyclic(const MultiDigraph& g) {
    std::vector<int> indeg(g.vertex_capacity(), 0);
    for (ArcId e = 0; e < g.arc_capacity(); ++e) {
        if (!g.arc_alive(e)) continue;
        if (g.is_loop(e)) return false;
        ++indeg[g.head(e)];
    }
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < g.vertex_capacity(); ++v)
        if (g.vertex_alive(v) && indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        ++seen;
        for (ArcId e : g.out_raw(v)) {
            if (!g.arc_alive(e)) continue;
            if (--indeg[g.head(e)] == 0) queue.push_back(g.head(e));
        }
    }
    return seen == g.num_vertices();
}

/// Dense component labels from an iterative Tarjan run; labels are numbered
/// in a deterministic order (by ascending root vertex discovery).
struct SccLabels {
    std::vector<int> comp;        // per vertex id; -1 for dead vertices
    std::vector<int> comp_size;
    int count = 0;

    bool same(VertexId u, VertexId v) const { return comp[u] >= 0 && comp[u] == comp[v]; }
};

/// Tarjan SCC restricted to alive vertices/arcs; optionally further restricted
/// to an arc mask (only arcs e with mask[e] != 0 are traversed).
inline SccLabels scc_labels(const MultiDigraph& g, const std::vector<char>* arc_mask = nullptr) {
    const int n = g.vertex_capacity();
    SccLabels res;
    res.comp.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    // explicit DFS stack: (vertex, next adjacency position)
    std::vector<std::pair<VertexId, size_t>> call;
    int next_index = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (!g.vertex_alive(root) || index[root] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            const auto& adj = g.out_raw(v);
            bool descended = false;
            while (pos < adj.size()) {
                ArcId e = adj[pos++];
                if (!g.arc_alive(e)) continue;
                if (arc_mask && !(*arc_mask)[e]) continue;
                VertexId w = g.head(e);
                if (index[w] == -1) {
                    call.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                int c = res.count++;
                int size = 0;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    res.comp[w] = c;
                    ++size;
                } while (w != v);
                res.comp_size.push_back(size);
            }
            VertexId finished = v;
            call.pop_back();
            if (!call.empty()) {
                VertexId parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return res;
}

/// Partition of the alive vertices into strongly connected components.
inline std::vector<std::vector<VertexId>> strongly_connected_components(const MultiDigraph& g) {
    SccLabels labels = scc_labels(g);
    std::vector<std::vector<VertexId>> parts(labels.count);
    for (VertexId v = 0; v < g.vertex_capacity(); ++v)
        if (labels.comp[v] >= 0) parts[labels.comp[v]].push_back(v);
    return parts;
}

/// Directed reachability from s to t avoiding forbidden arcs; s == t is
/// reachable by the empty path.
inline bool reaches(const MultiDigraph& g, VertexId s, VertexId t,
                    const std::vector<ArcId>& forbidden_arcs = {}) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) return true;
    std::vector<char> forbidden(g.arc_capacity(), 0);
    for (ArcId e : forbidden_arcs) forbidden[e] = 1;
    std::vector<char> seen(g.vertex_capacity(), 0);
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (ArcId e : g.out_raw(v)) {
            if (!g.arc_alive(e) || forbidden[e]) continue;
            VertexId w = g.head(e);
            if (w == t) return true;
            if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
    }
    return false;
}

}  // namespace faspcut
