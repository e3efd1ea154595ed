#pragma once

// Shared test fixtures: the two reference digraphs used across the suite and
// small brute-force oracles the library results are frozen against.

#include <faspcut/generators.hpp>
#include <faspcut/graph.hpp>
#include <faspcut/random.hpp>

#include <vector>

namespace fixtures {

using namespace faspcut;

// T3: directed triangle 0 -> 1 -> 2 -> 0 (arcs a=0, b=1, c=2)
inline MultiDigraph triangle() {
    MultiDigraph g(3);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(2, 0);
    return g;
}

// L1: one vertex with a loop
inline MultiDigraph loop_graph() {
    MultiDigraph g(1);
    g.add_arc(0, 0);
    return g;
}

// Two vertex-disjoint triangles: {0,1,2} and {3,4,5}
inline MultiDigraph two_triangles() {
    MultiDigraph g(6);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(2, 0);
    g.add_arc(3, 4);
    g.add_arc(4, 5);
    g.add_arc(5, 3);
    return g;
}

// Star of digons: center 0, leaves 1..3, each pair 0 <-> leaf
inline MultiDigraph star_of_digons() {
    MultiDigraph g(4);
    for (VertexId l = 1; l <= 3; ++l) {
        g.add_arc(0, l);
        g.add_arc(l, 0);
    }
    return g;
}

// G1: three cycle blocks sharing no vertices.
//   triangle 0-1-2 (arcs a,b,c = 0,1,2)
//   triangle 3-4-5 (arcs d,e,f = 3,4,5)
//   theta block on 6..11: g:6->7 h:7->8 l:7->11 m:11->8 i:8->9 j:9->10 k:10->6
//     (arc ids g=6, h=7, l=8, m=9, i=10, j=11, k=12)
// Exactly the arcs {a,b,c, d,e,f, g,i,j,k} have nonempty isolated subgraphs;
// h, l, m share no cycle that every g-cycle uses.
inline MultiDigraph g1() {
    MultiDigraph g(12);
    g.add_arc(0, 1);    // a = 0
    g.add_arc(1, 2);    // b = 1
    g.add_arc(2, 0);    // c = 2
    g.add_arc(3, 4);    // d = 3
    g.add_arc(4, 5);    // e = 4
    g.add_arc(5, 3);    // f = 5
    g.add_arc(6, 7);    // g = 6
    g.add_arc(7, 8);    // h = 7
    g.add_arc(7, 11);   // l = 8
    g.add_arc(11, 8);   // m = 9
    g.add_arc(8, 9);    // i = 10
    g.add_arc(9, 10);   // j = 11
    g.add_arc(10, 6);   // k = 12
    return g;
}

// G2: G1 plus six connector arcs that merge the blocks into one strongly
// connected tangle; every isolated subgraph becomes empty.
//   n1:2->4 n2:1->5 n3:4->7 n4:5->7 n5:8->1 n6:8->2  (ids 13..18)
inline MultiDigraph g2() {
    MultiDigraph g = g1();
    g.add_arc(2, 4);   // 13
    g.add_arc(1, 5);   // 14
    g.add_arc(4, 7);   // 15
    g.add_arc(5, 7);   // 16
    g.add_arc(8, 1);   // 17
    g.add_arc(8, 2);   // 18
    return g;
}

// Frozen golden values for the fixtures (independently cross-checked by
// exhaustive enumeration; see the brute-force helpers below).
inline const std::vector<ArcId> kG1NonemptyIso = {0, 1, 2, 3, 4, 5, 6, 10, 11, 12};
constexpr std::size_t kG1CycleCount = 4;
constexpr std::size_t kG2CycleCount = 20;
constexpr double kG1Optimum = 3;
constexpr double kG2Optimum = 4;

/// Minimum-weight feedback arc set by exhaustive subset enumeration.
/// Only for graphs with at most ~20 alive arcs.
inline double brute_force_fas(const MultiDigraph& g, const ArcWeights& w) {
    std::vector<ArcId> arcs = g.arcs();
    const std::size_t m = arcs.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        double cost = 0;
        MultiDigraph h = g;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ULL << i)) {
                cost += w[arcs[i]];
                h.remove_arc(arcs[i]);
            }
        if (cost < best && is_acyclic(h)) best = cost;
    }
    return best;
}

/// Minimum-weight feedback vertex set by exhaustive subset enumeration.
inline double brute_force_fvs(const MultiDigraph& g, const VertexWeights& psi) {
    std::vector<VertexId> verts = g.vertices();
    const std::size_t n = verts.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        double cost = 0;
        MultiDigraph h = g;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ULL << i)) {
                cost += psi[verts[i]];
                h.remove_vertex(verts[i]);
            }
        if (cost < best && is_acyclic(h)) best = cost;
    }
    return best;
}

/// Random multi-digraph with loops and parallel arcs, for property tests.
/// About loop_share of the arcs are loops and parallel_share duplicate an
/// earlier arc's endpoints.
inline MultiDigraph random_multigraph(Rng& rng, int n, int m,
                                      double loop_share = 0.05,
                                      double parallel_share = 0.15) {
    MultiDigraph g(n);
    std::vector<std::pair<VertexId, VertexId>> placed;
    for (int i = 0; i < m; ++i) {
        double roll = rng.unit();
        if (!placed.empty() && roll < parallel_share) {
            auto [u, v] = placed[rng.below(placed.size())];
            g.add_arc(u, v);
            placed.emplace_back(u, v);
        } else if (roll < parallel_share + loop_share) {
            VertexId v = static_cast<VertexId>(rng.below(n));
            g.add_arc(v, v);
            placed.emplace_back(v, v);
        } else {
            VertexId u = static_cast<VertexId>(rng.below(n));
            VertexId v = static_cast<VertexId>(rng.below(n));
            g.add_arc(u, v);
            placed.emplace_back(u, v);
        }
    }
    return g;
}

/// Random integer weights in [1, max_w].
inline ArcWeights random_weights(Rng& rng, const MultiDigraph& g, int max_w = 10) {
    ArcWeights w(g.arc_capacity());
    for (ArcId e = 0; e < g.arc_capacity(); ++e) w.set(e, double(rng.range(1, max_w)));
    return w;
}

}  // namespace fixtures
