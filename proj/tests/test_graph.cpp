#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace faspcut;

TEST_CASE("vertex and arc ids are dense and stable under deletion") {
    MultiDigraph g(3);
    ArcId a = g.add_arc(0, 1);
    ArcId b = g.add_arc(1, 2);
    ArcId c = g.add_arc(2, 0);
    CHECK(a == 0);
    CHECK(b == 1);
    CHECK(c == 2);
    g.remove_arc(b);
    CHECK(g.num_arcs() == 2);
    CHECK(g.tail(c) == 2);  // surviving arcs keep endpoints
    CHECK(g.head(c) == 0);
    CHECK(!g.arc_alive(b));
    CHECK(g.arcs() == std::vector<ArcId>{0, 2});
    g.restore_arc(b);
    CHECK(g.num_arcs() == 3);
    CHECK_THROWS_AS(g.restore_arc(b), std::domain_error);  // already alive
}

TEST_CASE("vertex removal tombstones incident arcs and is reversible") {
    MultiDigraph g = fixtures::triangle();
    std::vector<ArcId> removed = g.remove_vertex(1);
    CHECK(removed.size() == 2);  // arcs 0->1 and 1->2
    CHECK(g.num_arcs() == 1);
    CHECK(g.num_vertices() == 2);
    g.restore_vertex(1, removed);
    CHECK(g.num_arcs() == 3);
    CHECK(g.num_vertices() == 3);
}

TEST_CASE("vertex removal with a loop removes the loop once") {
    MultiDigraph g(2);
    g.add_arc(0, 0);
    g.add_arc(0, 1);
    std::vector<ArcId> removed = g.remove_vertex(0);
    CHECK(removed.size() == 2);
    CHECK(g.num_arcs() == 0);
    g.restore_vertex(0, removed);
    CHECK(g.num_arcs() == 2);
}

TEST_CASE("unknown ids raise domain errors") {
    MultiDigraph g(2);
    CHECK_THROWS_AS(g.add_arc(0, 5), std::domain_error);
    CHECK_THROWS_AS(g.remove_arc(0), std::domain_error);
    CHECK_THROWS_AS((void)g.tail(3), std::domain_error);
}

TEST_CASE("parallel_bundle returns the full parallel class") {
    SUBCASE("triangle: singleton bundles") {
        MultiDigraph g = fixtures::triangle();
        CHECK(parallel_bundle(g, 0) == std::vector<ArcId>{0});
    }
    SUBCASE("digon with a duplicate") {
        MultiDigraph g(2);
        ArcId p = g.add_arc(0, 1);
        ArcId q = g.add_arc(0, 1);
        ArcId r = g.add_arc(1, 0);
        CHECK(parallel_bundle(g, p) == std::vector<ArcId>{p, q});
        CHECK(parallel_bundle(g, q) == std::vector<ArcId>{p, q});  // equivalence class
        CHECK(antiparallel_bundle(g, p) == std::vector<ArcId>{r});
        CHECK(antiparallel_bundle(g, r) == std::vector<ArcId>{p, q});
    }
    SUBCASE("loop bundles") {
        MultiDigraph g(1);
        ArcId l1 = g.add_arc(0, 0);
        ArcId l2 = g.add_arc(0, 0);
        CHECK(parallel_bundle(g, l1) == std::vector<ArcId>{l1, l2});
    }
}

TEST_CASE("is_acyclic") {
    CHECK(is_acyclic(MultiDigraph(0)));
    CHECK(is_acyclic(MultiDigraph(5)));
    CHECK(!is_acyclic(fixtures::triangle()));
    CHECK(!is_acyclic(fixtures::loop_graph()));
    MultiDigraph path(3);
    path.add_arc(0, 1);
    path.add_arc(1, 2);
    CHECK(is_acyclic(path));
    path.add_arc(2, 0);
    CHECK(!is_acyclic(path));
}

TEST_CASE("strongly connected components") {
    SUBCASE("triangle is one component") {
        auto parts = strongly_connected_components(fixtures::triangle());
        REQUIRE(parts.size() == 1);
        CHECK(parts[0] == std::vector<VertexId>{0, 1, 2});
    }
    SUBCASE("path is all singletons") {
        MultiDigraph g(3);
        g.add_arc(0, 1);
        g.add_arc(1, 2);
        CHECK(strongly_connected_components(g).size() == 3);
    }
    SUBCASE("two triangles give two components of size 3") {
        auto parts = strongly_connected_components(fixtures::two_triangles());
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].size() == 3);
        CHECK(parts[1].size() == 3);
    }
    SUBCASE("arc mask restricts traversal") {
        MultiDigraph g = fixtures::triangle();
        std::vector<char> mask(g.arc_capacity(), 1);
        mask[1] = 0;
        SccLabels labels = scc_labels(g, &mask);
        CHECK(!labels.same(0, 1));
    }
}

TEST_CASE("acyclicity matches singleton SCCs plus loop check") {
    Rng rng(41);
    for (int it = 0; it < 100; ++it) {
        MultiDigraph g = fixtures::random_multigraph(rng, 8, 12);
        SccLabels labels = scc_labels(g);
        bool loops = false;
        for (ArcId e : g.arcs()) loops |= g.is_loop(e);
        bool singletons = true;
        for (int size : labels.comp_size) singletons &= size == 1;
        CHECK(is_acyclic(g) == (singletons && !loops));
    }
}

TEST_CASE("reaches with forbidden arcs") {
    MultiDigraph g = fixtures::triangle();
    CHECK(reaches(g, 0, 2));
    CHECK(!reaches(g, 0, 2, {1}));  // only path used arc b
    CHECK(reaches(g, 0, 0));        // s == t by the empty path
    MultiDigraph l = fixtures::loop_graph();
    CHECK(reaches(l, 0, 0));
    CHECK_THROWS_AS(reaches(g, 0, 9), std::domain_error);
}

TEST_CASE("reaches is monotone in the forbidden set") {
    Rng rng(77);
    for (int it = 0; it < 50; ++it) {
        MultiDigraph g = fixtures::random_multigraph(rng, 6, 10);
        VertexId s = static_cast<VertexId>(rng.below(6));
        VertexId t = static_cast<VertexId>(rng.below(6));
        std::vector<ArcId> some = rng.sample(g.arcs(), 3);
        if (!reaches(g, s, t)) CHECK(!reaches(g, s, t, some));
        if (reaches(g, s, t, some)) CHECK(reaches(g, s, t));
    }
}

TEST_CASE("weights enforce positivity and the infinite sentinel") {
    ArcWeights w(3);
    CHECK(w[0] == 1.0);
    w.set(1, 2.5);
    CHECK(w[1] == 2.5);
    CHECK_THROWS_AS(w.set(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(w.set(0, -1.0), std::domain_error);
    w.set(2, ArcWeights::kInfinite);
    CHECK(w.is_infinite(2));
    CHECK(!w.is_infinite(1));
    CHECK(w.total(std::vector<ArcId>{0, 1}) == doctest::Approx(3.5));

    VertexWeights psi(2);
    CHECK_THROWS_AS(psi.set(0, 0.0), std::domain_error);
    psi.set(1, 4.0);
    CHECK(psi[1] == 4.0);
}
