#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <faspcut/io.hpp>

#include <sstream>

using namespace faspcut;

TEST_CASE("graph format round trip") {
    std::istringstream in(
        "# a comment line\n"
        "0 1 2.5\n"
        "1 2\n"
        "2 0 1\n"
        "\n"
        "2 0 1   # parallel to the previous arc\n"
        "3 3\n");
    GraphFile gf = read_graph(in);
    CHECK(gf.graph.num_vertices() == 4);
    CHECK(gf.graph.num_arcs() == 5);
    CHECK(gf.weights[0] == 2.5);
    CHECK(gf.weights[1] == 1.0);  // default weight
    CHECK(parallel_bundle(gf.graph, 2) == std::vector<ArcId>{2, 3});  // repeated line
    CHECK(gf.graph.is_loop(4));

    std::ostringstream out;
    write_graph(out, gf.graph, &gf.weights);
    std::istringstream back(out.str());
    GraphFile gf2 = read_graph(back);
    CHECK(gf2.graph.num_arcs() == gf.graph.num_arcs());
    for (ArcId e : gf.graph.arcs()) {
        CHECK(gf2.graph.tail(e) == gf.graph.tail(e));
        CHECK(gf2.graph.head(e) == gf.graph.head(e));
        CHECK(gf2.weights[e] == gf.weights[e]);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_graph(in);
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error("0 1\nbogus\n", 2);
    expect_error("0\n", 1);
    expect_error("0 1\n1 2 0\n", 2);      // non-positive weight
    expect_error("0 1\n1 2 -3\n", 2);
    expect_error("-1 2\n", 1);            // negative vertex id
    expect_error("0 1 1.5 extra\n", 1);   // trailing tokens
    expect_error("0 1\n1 2 abc\n", 2);    // malformed weight
}

TEST_CASE("vertex weight files") {
    MultiDigraph g(3);
    g.add_arc(0, 1);
    std::istringstream in("# psi\n0 2.5\n2 7\n");
    VertexWeights psi = read_vertex_weights(in, g);
    CHECK(psi[0] == 2.5);
    CHECK(psi[1] == 1.0);  // untouched default
    CHECK(psi[2] == 7.0);

    std::istringstream bad("5 1\n");
    CHECK_THROWS_AS(read_vertex_weights(bad, g), ParseError);
    std::istringstream neg("0 -1\n");
    CHECK_THROWS_AS(read_vertex_weights(neg, g), ParseError);
}

TEST_CASE("arc weight override files") {
    MultiDigraph g(3);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    ArcWeights w = ArcWeights::uniform(g);
    std::istringstream in("1 4.5\n");
    apply_arc_weights(in, g, w);
    CHECK(w[0] == 1.0);
    CHECK(w[1] == 4.5);
    std::istringstream bad("9 1\n");
    CHECK_THROWS_AS(apply_arc_weights(bad, g, w), ParseError);
}

TEST_CASE("solution files") {
    std::ostringstream out;
    write_solution(out, {2, 5, 9}, 7.5);
    CHECK(out.str() == "# weight 7.5\n2\n5\n9\n");
    std::istringstream back(out.str());
    CHECK(read_solution(back) == std::vector<ArcId>{2, 5, 9});
}

TEST_CASE("weights format preserves doubles exactly") {
    CHECK(format_weight(1.0) == "1");
    CHECK(format_weight(ArcWeights::kInfinite) == "inf");
    double awkward = 0.1 + 0.2;
    CHECK(std::stod(format_weight(awkward)) == awkward);
}

TEST_CASE("circuit ingestion tags external instances") {
    std::ostringstream path;
    // T3 plus a duplicate line and a loop, exercising the format contract
    std::string file = "0 1\n1 2\n2 0\n0 1\n5 5\n";
    std::string tmp = "/tmp/faspcut_io_test.txt";
    {
        std::ofstream out(tmp);
        out << file;
    }
    Instance inst = ingest_circuit(tmp);
    CHECK(inst.family == "external");
    CHECK(inst.graph.num_arcs() == 5);
    CHECK(parallel_bundle(inst.graph, 0).size() == 2);  // duplicate preserved
    CHECK(inst.graph.is_loop(4));                        // loop preserved
    CHECK_THROWS_AS(ingest_circuit("/tmp/faspcut_does_not_exist.txt"), ParseError);
}
