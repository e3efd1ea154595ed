#pragma once

#include <deque>
#include <optional>
#include <set>

#include "graph.hpp"

namespace faspcut {

/// Thrown when an enumeration or search exceeds its configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arc/vertex set of a subgraph view anchored at a source arc.
struct ArcSubgraph {
    ArcId source_arc = kNoArc;
    std::vector<ArcId> arcs;       // ascending
    std::vector<VertexId> vertices;  // ascending

    bool empty() const { return arcs.empty(); }
};

struct ElementaryCycle {
    std::vector<ArcId> arcs;  // consecutive, closing at the start vertex

    std::size_t length() const { return arcs.size(); }
};

namespace detail {

inline std::vector<VertexId> arc_set_vertices(const MultiDigraph& g, const std::vector<ArcId>& arcs) {
    std::vector<VertexId> verts;
    for (ArcId e : arcs) {
        verts.push_back(g.tail(e));
        verts.push_back(g.head(e));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

/// Reachability probe used by the cycle-cover construction: path s -> t in
/// the graph minus the out-arcs of blocked_out and the in-arcs of blocked_in.
/// The blocks deliberately bind at the endpoints too: an arc entering (or
/// leaving) the same vertex as the source arc can never share an elementary
/// cycle with it, so a probe starting at a blocked vertex must fail.
inline bool probe_path(const MultiDigraph& g, VertexId s, VertexId t,
                       VertexId blocked_out, VertexId blocked_in,
                       std::vector<char>& seen_buf) {
    if (s == t) return true;
    std::fill(seen_buf.begin(), seen_buf.end(), 0);
    std::vector<VertexId> stack{s};
    seen_buf[s] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (v == blocked_out) continue;
        for (ArcId e : g.out_raw(v)) {
            if (!g.arc_alive(e)) continue;
            VertexId w = g.head(e);
            if (w == blocked_in) continue;
            if (w == t) return true;
            if (!seen_buf[w]) { seen_buf[w] = 1; stack.push_back(w); }
        }
    }
    return false;
}

}  // namespace detail

/// G_e: the subgraph induced by all elementary cycles through e or a parallel
/// of e. Built by the two-sided reachability probe (an arc j survives iff a
/// cycle segment head(e)->tail(j) exists that avoids head(j) and a segment
/// head(j)->tail(e) exists that avoids tail(j)), followed by the SCC
/// restriction around e's endpoints.
inline ArcSubgraph cycle_cover(const MultiDigraph& g, ArcId e) {
    g.check_arc(e);
    ArcSubgraph res;
    res.source_arc = e;

    if (g.is_loop(e)) {
        // the only elementary cycles through a loop are the parallel loops
        res.arcs = parallel_bundle(g, e);
        res.vertices = {g.tail(e)};
        return res;
    }

    SccLabels base = scc_labels(g);
    if (!base.same(g.head(e), g.tail(e))) return res;  // e lies on no cycle

    const int comp_e = base.comp[g.head(e)];
    std::vector<char> seen(g.vertex_capacity(), 0);
    std::vector<char> keep(g.arc_capacity(), 0);
    for (ArcId j = 0; j < g.arc_capacity(); ++j) {
        if (!g.arc_alive(j)) continue;
        if (base.comp[g.tail(j)] != comp_e || base.comp[g.head(j)] != comp_e) continue;
        if (g.is_loop(j)) continue;  // a loop can only appear in its own cycle
        if (g.tail(j) == g.tail(e) && g.head(j) == g.head(e)) { keep[j] = 1; continue; }
        bool fwd = detail::probe_path(g, g.head(e), g.tail(j), g.head(j), kNoVertex, seen);
        bool bwd = fwd && detail::probe_path(g, g.head(j), g.tail(e), kNoVertex, g.tail(j), seen);
        if (fwd && bwd) keep[j] = 1;
    }

    SccLabels pruned = scc_labels(g, &keep);
    if (!pruned.same(g.head(e), g.tail(e))) return res;
    const int comp = pruned.comp[g.head(e)];
    for (ArcId j = 0; j < g.arc_capacity(); ++j)
        if (keep[j] && pruned.comp[g.tail(j)] == comp && pruned.comp[g.head(j)] == comp)
            res.arcs.push_back(j);
    res.vertices = detail::arc_set_vertices(g, res.arcs);
    return res;
}

/// I_e: the subgraph induced by the isolated cycles through e's bundle.
/// Arcs lying on any cycle of G \ F->(e) are discarded; what remains of the
/// strongly connected component around e is exactly the isolated part.
inline ArcSubgraph isolated_subgraph(const MultiDigraph& g, ArcId e) {
    g.check_arc(e);
    ArcSubgraph res;
    res.source_arc = e;

    std::vector<ArcId> bundle = parallel_bundle(g, e);

    if (g.is_loop(e)) {  // every loop is an isolated cycle
        res.arcs = std::move(bundle);
        res.vertices = {g.tail(e)};
        return res;
    }

    SccLabels base = scc_labels(g);
    if (!base.same(g.head(e), g.tail(e))) return res;

    // membership mask of G \ F->(e)
    std::vector<char> mask(g.arc_capacity(), 1);
    for (ArcId f : bundle) mask[f] = 0;
    SccLabels avoid = scc_labels(g, &mask);

    // keep = arcs on no cycle of G \ F->(e), plus the bundle itself
    std::vector<char> keep(g.arc_capacity(), 0);
    for (ArcId f = 0; f < g.arc_capacity(); ++f) {
        if (!g.arc_alive(f)) continue;
        if (!mask[f]) { keep[f] = 1; continue; }  // the bundle
        bool on_avoiding_cycle = g.is_loop(f) || avoid.same(g.tail(f), g.head(f));
        if (!on_avoiding_cycle) keep[f] = 1;
    }

    SccLabels iso = scc_labels(g, &keep);
    if (!iso.same(g.head(e), g.tail(e))) return res;
    const int comp = iso.comp[g.head(e)];
    for (ArcId f = 0; f < g.arc_capacity(); ++f)
        if (keep[f] && iso.comp[g.tail(f)] == comp && iso.comp[g.head(f)] == comp)
            res.arcs.push_back(f);
    res.vertices = detail::arc_set_vertices(g, res.arcs);
    return res;
}

/// One elementary cycle, or nullopt on a DAG. Selection rule: the lowest-id
/// arc lying on some cycle, closed by a shortest path (BFS within the graph)
/// from its head back to its tail.
inline std::optional<ElementaryCycle> find_elementary_cycle(const MultiDigraph& g) {
    SccLabels labels = scc_labels(g);
    ArcId pick = kNoArc;
    for (ArcId e = 0; e < g.arc_capacity(); ++e) {
        if (!g.arc_alive(e)) continue;
        if (g.is_loop(e) || labels.same(g.head(e), g.tail(e))) { pick = e; break; }
    }
    if (pick == kNoArc) return std::nullopt;
    if (g.is_loop(pick)) return ElementaryCycle{{pick}};

    // BFS shortest path head(pick) -> tail(pick); ties resolved by the
    // canonical ascending arc order of the adjacency lists
    const VertexId s = g.head(pick), t = g.tail(pick);
    std::vector<ArcId> via(g.vertex_capacity(), kNoArc);
    std::vector<char> seen(g.vertex_capacity(), 0);
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
        VertexId v = queue.front();
        queue.pop_front();
        for (ArcId e : g.out_raw(v)) {
            if (!g.arc_alive(e)) continue;
            VertexId w = g.head(e);
            if (seen[w]) continue;
            seen[w] = 1;
            via[w] = e;
            if (w == t) break;
            queue.push_back(w);
        }
    }
    std::vector<ArcId> path;
    for (VertexId v = t; v != s; v = g.tail(via[v])) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    ElementaryCycle c;
    c.arcs.push_back(pick);
    c.arcs.insert(c.arcs.end(), path.begin(), path.end());
    return c;
}

/// Exhaustive elementary-cycle enumeration (test/oracle support; counting is
/// #P-hard, so this never sits on a production path). Cycles are reported in
/// a deterministic order: by smallest vertex, then DFS order over ascending
/// arc ids. Throws ResourceError when more than `limit` cycles exist.
inline std::vector<ElementaryCycle> enumerate_elementary_cycles(const MultiDigraph& g,
                                                                std::size_t limit = 100000) {
    if (limit == 0) throw std::domain_error("cycle limit must be positive");
    std::vector<ElementaryCycle> out;

    // loops first, each one a length-1 cycle
    std::vector<std::vector<ArcId>> loops_at(g.vertex_capacity());
    for (ArcId e = 0; e < g.arc_capacity(); ++e)
        if (g.arc_alive(e) && g.is_loop(e)) loops_at[g.tail(e)].push_back(e);

    std::vector<char> used(g.vertex_capacity(), 0);
    std::vector<ArcId> path;

    // vertex-rooted DFS restricted to vertices >= root, so each cycle is
    // discovered exactly once from its smallest vertex
    for (VertexId root = 0; root < g.vertex_capacity(); ++root) {
        if (!g.vertex_alive(root)) continue;
        for (ArcId l : loops_at[root]) {
            if (out.size() >= limit) throw ResourceError("elementary cycle budget exceeded");
            out.push_back(ElementaryCycle{{l}});
        }
        // recursive lambda
        auto dfs = [&](auto&& self, VertexId v) -> void {
            used[v] = 1;
            for (ArcId e : g.out_raw(v)) {
                if (!g.arc_alive(e) || g.is_loop(e)) continue;
                VertexId w = g.head(e);
                if (w < root) continue;
                if (w == root) {
                    if (out.size() >= limit) throw ResourceError("elementary cycle budget exceeded");
                    path.push_back(e);
                    out.push_back(ElementaryCycle{path});
                    path.pop_back();
                } else if (!used[w]) {
                    path.push_back(e);
                    self(self, w);
                    path.pop_back();
                }
            }
            used[v] = 0;
        };
        dfs(dfs, root);
    }
    return out;
}

/// Convenience: sorted arc-id set of a cycle (for set comparisons in tests).
inline std::vector<ArcId> cycle_arc_set(const ElementaryCycle& c) {
    std::vector<ArcId> s = c.arcs;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace faspcut
