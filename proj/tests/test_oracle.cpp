#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <faspcut/oracle.hpp>
#include <faspcut/solver.hpp>

#include <set>

#include "fixtures.hpp"

using namespace faspcut;

TEST_CASE("exact_fas on the small fixtures") {
    MultiDigraph t3 = fixtures::triangle();
    OracleResult r = exact_fas(t3, ArcWeights::uniform(t3));
    CHECK(r.optimum == 1);
    CHECK(r.one_solution.size() == 1);
    CHECK(verify_feedback(t3, r.one_solution));

    MultiDigraph tt = fixtures::two_triangles();
    CHECK(exact_fas(tt, ArcWeights::uniform(tt)).optimum == 2);

    MultiDigraph g1 = fixtures::g1();
    CHECK(exact_fas(g1, ArcWeights::uniform(g1)).optimum == fixtures::kG1Optimum);

    MultiDigraph g2 = fixtures::g2();
    CHECK(exact_fas(g2, ArcWeights::uniform(g2)).optimum == fixtures::kG2Optimum);

    CHECK(exact_fas(MultiDigraph(3), ArcWeights(0)).optimum == 0);
}

TEST_CASE("exact_fas matches subset enumeration on random weighted instances") {
    Rng rng(71);
    for (int it = 0; it < 60; ++it) {
        MultiDigraph g = fixtures::random_multigraph(rng, 6, 11);
        ArcWeights w = fixtures::random_weights(rng, g, 7);
        OracleResult r = exact_fas(g, w);
        CHECK(r.optimum == fixtures::brute_force_fas(g, w));
        CHECK(verify_feedback(g, r.one_solution));
        CHECK(w.total(r.one_solution) == doctest::Approx(r.optimum));
    }
}

TEST_CASE("oracle optimum is invariant under arc relabeling") {
    Rng rng(83);
    for (int it = 0; it < 20; ++it) {
        MultiDigraph g = fixtures::random_multigraph(rng, 6, 10);
        ArcWeights w = fixtures::random_weights(rng, g, 5);
        // rebuild with a shuffled arc insertion order
        std::vector<ArcId> order = g.arcs();
        rng.shuffle(order);
        MultiDigraph h(g.vertex_capacity());
        ArcWeights wh;
        for (ArcId e : order) {
            ArcId f = h.add_arc(g.tail(e), g.head(e));
            wh.set(f, w[e]);
        }
        CHECK(exact_fas(g, w).optimum == exact_fas(h, wh).optimum);
    }
}

TEST_CASE("node budget raises a resource error") {
    MultiDigraph g(12);
    Rng rng(3);
    for (int i = 0; i < 40; ++i)
        g.add_arc(static_cast<VertexId>(rng.below(12)), static_cast<VertexId>(rng.below(12)));
    CHECK_THROWS_AS(exact_fas(g, ArcWeights::uniform(g), {5}), ResourceError);
}

TEST_CASE("all-minima enumeration respects bundle closure") {
    // every minimum that contains an arc contains the arc's whole bundle
    Rng rng(97);
    int nontrivial = 0;
    for (int it = 0; it < 40; ++it) {
        MultiDigraph g = fixtures::random_multigraph(rng, 5, 9, 0.1, 0.4);
        ArcWeights w = fixtures::random_weights(rng, g, 3);
        OracleResult r = exact_fas(g, w, {}, true);
        REQUIRE(r.all_solutions.has_value());
        for (const auto& sol : *r.all_solutions) {
            CHECK(w.total(sol) == doctest::Approx(r.optimum));
            CHECK(verify_feedback(g, sol));
            std::set<ArcId> in(sol.begin(), sol.end());
            for (ArcId e : sol)
                for (ArcId f : parallel_bundle(g, e)) {
                    CHECK(in.count(f) == 1);
                    if (f != e) ++nontrivial;
                }
        }
    }
    CHECK(nontrivial > 0);  // parallel bundles must actually have occurred
}

TEST_CASE("exact_fvs on the small fixtures") {
    MultiDigraph t3 = fixtures::triangle();
    CHECK(exact_fvs(t3, VertexWeights::uniform(t3)).optimum == 1);

    MultiDigraph l1 = fixtures::loop_graph();
    VertexWeights psi = VertexWeights::uniform(l1);
    psi.set(0, 7.5);
    OracleResult r = exact_fvs(l1, psi);
    CHECK(r.optimum == 7.5);
    CHECK(r.one_solution == std::vector<VertexId>{0});

    MultiDigraph star = fixtures::star_of_digons();
    OracleResult s = exact_fvs(star, VertexWeights::uniform(star));
    CHECK(s.optimum == 1);
    CHECK(s.one_solution == std::vector<VertexId>{0});  // the center kills all digons
}

TEST_CASE("exact_fvs matches subset enumeration on random instances") {
    Rng rng(103);
    for (int it = 0; it < 40; ++it) {
        MultiDigraph g = fixtures::random_multigraph(rng, 6, 11);
        VertexWeights psi(g.vertex_capacity());
        for (VertexId v = 0; v < g.vertex_capacity(); ++v)
            psi.set(v, double(rng.range(1, 6)));
        CHECK(exact_fvs(g, psi).optimum == fixtures::brute_force_fvs(g, psi));
    }
}

TEST_CASE("greedy removal") {
    SUBCASE("DAG yields the empty set") {
        MultiDigraph g(4);
        g.add_arc(0, 1);
        g.add_arc(1, 2);
        g.add_arc(0, 3);
        CHECK(greedy_removal(g).empty());
    }
    SUBCASE("triangle yields one arc") {
        CHECK(greedy_removal(fixtures::triangle()).size() == 1);
    }
    SUBCASE("two disjoint triangles yield two arcs") {
        CHECK(greedy_removal(fixtures::two_triangles()).size() == 2);
    }
    SUBCASE("loops are always part of the result") {
        MultiDigraph g(2);
        ArcId l = g.add_arc(1, 1);
        g.add_arc(0, 1);
        std::vector<ArcId> eps = greedy_removal(g);
        CHECK(std::count(eps.begin(), eps.end(), l) == 1);
    }
    SUBCASE("output is always a feedback set") {
        Rng rng(111);
        for (int it = 0; it < 60; ++it) {
            MultiDigraph g = fixtures::random_multigraph(rng, 9, 20);
            CHECK(verify_feedback(g, greedy_removal(g)));
        }
    }
    SUBCASE("deterministic") {
        Rng rng(112);
        MultiDigraph g = fixtures::random_multigraph(rng, 10, 24);
        std::vector<ArcId> first = greedy_removal(g);
        CHECK(greedy_removal(g) == first);
    }
}
