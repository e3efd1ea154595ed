#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "graph.hpp"
#include "random.hpp"

namespace faspcut {

/// A generated benchmark instance. plantedOptimum, when present, is the true
/// minimum feedback arc length guaranteed by construction.
struct Instance {
    MultiDigraph graph;
    ArcWeights weights;
    std::optional<double> planted_optimum;
    std::string family;
    std::uint64_t seed = 0;
    std::map<std::string, double> params;  // for report sidecars
};

/// Random digraph: each ordered pair (u,v), u != v, gets an arc independently
/// with probability p. No parallels, no loops.
inline Instance gen_erdos_renyi(int n_vertices, double p_arc, std::uint64_t seed) {
    if (n_vertices < 0) throw std::domain_error("gen_erdos_renyi: negative vertex count");
    if (p_arc < 0 || p_arc > 1) throw std::domain_error("gen_erdos_renyi: p must be in [0,1]");
    Instance inst;
    inst.family = "erdos-renyi";
    inst.seed = seed;
    inst.params = {{"n", double(n_vertices)}, {"p", p_arc}};
    inst.graph = MultiDigraph(n_vertices);
    Rng rng(seed);
    for (VertexId u = 0; u < n_vertices; ++u)
        for (VertexId v = 0; v < n_vertices; ++v)
            if (u != v && rng.unit() < p_arc) inst.graph.add_arc(u, v);
    inst.weights = ArcWeights::uniform(inst.graph);
    return inst;
}

/// Random tournament: every unordered pair of vertices gets exactly one arc,
/// direction chosen by a fair coin. n(n-1)/2 arcs.
inline Instance gen_tournament(int n_vertices, std::uint64_t seed) {
    if (n_vertices < 1) throw std::domain_error("gen_tournament: need at least one vertex");
    Instance inst;
    inst.family = "tournament";
    inst.seed = seed;
    inst.params = {{"n", double(n_vertices)}};
    inst.graph = MultiDigraph(n_vertices);
    Rng rng(seed);
    for (VertexId u = 0; u < n_vertices; ++u)
        for (VertexId v = u + 1; v < n_vertices; ++v)
            rng.coin() ? inst.graph.add_arc(u, v) : inst.graph.add_arc(v, u);
    inst.weights = ArcWeights::uniform(inst.graph);
    return inst;
}

/// Randomly oriented maximal planar triangulation (3n-6 edges, built by
/// repeatedly inserting a vertex into a random face), then floor(p*|E|) arcs
/// rewired to fresh random endpoint pairs avoiding duplicates and loops; the
/// small-world style perturbation destroys planarity as p grows.
inline Instance gen_perturbed_planar(int n_vertices, double rewire_fraction, std::uint64_t seed) {
    if (n_vertices < 3) throw std::domain_error("gen_perturbed_planar: need at least 3 vertices");
    if (rewire_fraction < 0 || rewire_fraction > 1)
        throw std::domain_error("gen_perturbed_planar: p must be in [0,1]");
    Instance inst;
    inst.family = "perturbed-planar";
    inst.seed = seed;
    inst.params = {{"n", double(n_vertices)}, {"p", rewire_fraction}};
    Rng rng(seed);

    // incremental triangulation; faces stored as vertex triples
    std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}, {0, 2}};
    for (VertexId v = 3; v < n_vertices; ++v) {
        std::size_t fi = static_cast<std::size_t>(rng.below(faces.size()));
        std::array<VertexId, 3> f = faces[fi];
        faces[fi] = {f[0], f[1], v};
        faces.push_back({f[1], f[2], v});
        faces.push_back({f[2], f[0], v});
        edges.emplace_back(f[0], v);
        edges.emplace_back(f[1], v);
        edges.emplace_back(f[2], v);
    }

    // random orientation per edge
    std::vector<std::pair<VertexId, VertexId>> arcs;
    arcs.reserve(edges.size());
    for (auto [u, v] : edges)
        arcs.emplace_back(rng.coin() ? std::pair{u, v} : std::pair{v, u});

    // rewiring: replace selected arcs by fresh ordered pairs
    std::set<std::pair<VertexId, VertexId>> present(arcs.begin(), arcs.end());
    const std::size_t n_rewire =
        static_cast<std::size_t>(rewire_fraction * static_cast<double>(arcs.size()));
    std::vector<std::size_t> indices(arcs.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    for (std::size_t i : rng.sample(indices, n_rewire)) {
        present.erase(arcs[i]);
        std::pair<VertexId, VertexId> fresh;
        do {
            fresh.first = static_cast<VertexId>(rng.below(n_vertices));
            fresh.second = static_cast<VertexId>(rng.below(n_vertices));
        } while (fresh.first == fresh.second || present.count(fresh));
        present.insert(fresh);
        arcs[i] = fresh;
    }

    inst.graph = MultiDigraph(n_vertices);
    for (auto [u, v] : arcs) inst.graph.add_arc(u, v);
    inst.weights = ArcWeights::uniform(inst.graph);
    return inst;
}

/// Planted-optimum instances: k vertex-disjoint certificate cycles (a forward
/// path closed by one backward arc each) embedded in an otherwise forward-only
/// random DAG over a hidden permutation. The certificates are arc-disjoint, so
/// every feedback set costs at least the sum of the cheapest arc per
/// certificate; the backward arcs are exactly those cheapest arcs and removing
/// them leaves a DAG, hence plantedOptimum is the true minimum.
inline Instance gen_planted(int n_vertices, int n_arcs, int k, bool weighted, std::uint64_t seed) {
    if (k < 1) throw std::domain_error("gen_planted: need k >= 1");
    if (n_vertices < 2 * k)
        throw std::domain_error("gen_planted: too few vertices for k disjoint certificate cycles");
    Instance inst;
    inst.family = "planted";
    inst.seed = seed;
    inst.params = {{"n", double(n_vertices)}, {"m", double(n_arcs)},
                   {"k", double(k)}, {"weighted", weighted ? 1.0 : 0.0}};
    Rng rng(seed);

    // hidden linear order
    std::vector<VertexId> perm(n_vertices);
    for (VertexId v = 0; v < n_vertices; ++v) perm[v] = v;
    rng.shuffle(perm);
    std::vector<int> pos(n_vertices);
    for (int i = 0; i < n_vertices; ++i) pos[perm[i]] = i;

    // block sizes in [2,4], total bounded by the vertex count
    std::vector<int> sizes(k, 2);
    int total = 2 * k;
    for (int i = 0; i < k; ++i) {
        int room = std::min(2, n_vertices - total);
        int extra = static_cast<int>(rng.below(room + 1));
        sizes[i] += extra;
        total += extra;
    }

    std::vector<VertexId> all(n_vertices);
    for (VertexId v = 0; v < n_vertices; ++v) all[v] = v;
    std::vector<VertexId> chosen = rng.sample(all, total);

    inst.graph = MultiDigraph(n_vertices);
    inst.weights = ArcWeights();
    std::set<std::pair<VertexId, VertexId>> used;
    double planted = 0;
    int cursor = 0;
    for (int i = 0; i < k; ++i) {
        std::vector<VertexId> block(chosen.begin() + cursor, chosen.begin() + cursor + sizes[i]);
        cursor += sizes[i];
        std::sort(block.begin(), block.end(),
                  [&](VertexId a, VertexId b) { return pos[a] < pos[b]; });
        const double back_w = weighted ? double(rng.range(1, 10)) : 1.0;
        for (std::size_t j = 0; j + 1 < block.size(); ++j) {
            ArcId e = inst.graph.add_arc(block[j], block[j + 1]);
            inst.weights.set(e, weighted ? double(rng.range(int(back_w), 10)) : 1.0);
            used.insert({block[j], block[j + 1]});
        }
        ArcId b = inst.graph.add_arc(block.back(), block.front());
        inst.weights.set(b, back_w);
        used.insert({block.back(), block.front()});
        planted += back_w;
    }

    const long certificate_arcs = total;  // (size-1) path arcs + 1 backward arc per block
    const long fillers = n_arcs - certificate_arcs;
    const long forward_pairs = static_cast<long>(n_vertices) * (n_vertices - 1) / 2;
    if (fillers < 0 || fillers > forward_pairs - (certificate_arcs - k))
        throw std::domain_error("gen_planted: arc count infeasible for these parameters");
    for (long placed = 0; placed < fillers;) {
        VertexId u = static_cast<VertexId>(rng.below(n_vertices));
        VertexId v = static_cast<VertexId>(rng.below(n_vertices));
        if (pos[u] > pos[v]) std::swap(u, v);
        if (u == v || used.count({u, v})) continue;
        ArcId e = inst.graph.add_arc(u, v);
        inst.weights.set(e, weighted ? double(rng.range(1, 10)) : 1.0);
        used.insert({u, v});
        ++placed;
    }
    inst.planted_optimum = planted;
    return inst;
}

}  // namespace faspcut
