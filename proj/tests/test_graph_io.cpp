#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epacker/generate.hpp"
#include "epacker/graph_io.hpp"
#include "support/corpus.hpp"

using namespace epk;

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));

    Graph edgeless = parse_edge_list("n 4\n");
    CHECK(edgeless.vertex_count() == 4);
    CHECK(edgeless.edge_count() == 0);

    Graph commented = parse_edge_list("# a path\n0 1 # edge one\n\n1 2\n");
    CHECK(commented.same_structure(p3));

    // arbitrary ids become labels
    Graph sparse_ids = parse_edge_list("5 9\n9 7");
    CHECK(sparse_ids.vertex_count() == 3);
    CHECK(sparse_ids.labels() == std::vector<int>{5, 7, 9});
    CHECK(sparse_ids.has_edge(0, 2)); // 5-9
    CHECK(sparse_ids.has_edge(1, 2)); // 7-9
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\nx 2\n"), doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 0\n"), doctest::Contains("duplicate"),
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 3\n"), doctest::Contains("self-loop"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("0 1\nn 4\n"), parse_error); // header not first
}

TEST_CASE("graph6 fixed values") {
    // K_4: header 'C' = 67, six upper-triangle bits all one -> 63 + 63 = '~'.
    Graph k4 = parse_graph6("C~");
    CHECK(k4.same_structure(make_complete(4)));
    CHECK(serialize_graph6(make_complete(4)) == "C~");

    // P_3 = 0-1, 1-2: bits 101, padded 101000 -> 40 + 63 = 'g'.
    CHECK(serialize_graph6(make_path(3)) == "Bg");
    CHECK(parse_graph6("Bg").same_structure(make_path(3)));

    CHECK(parse_graph6(">>graph6<<C~\n").same_structure(make_complete(4)));
}

TEST_CASE("graph6 strictness") {
    CHECK_THROWS_AS(parse_graph6("C~~"), parse_error);  // trailing byte
    CHECK_THROWS_AS(parse_graph6("C"), parse_error);    // missing body
    CHECK_THROWS_AS(parse_graph6("B "), parse_error);   // byte below 63
    CHECK_THROWS_WITH_AS(parse_graph6("Bh"), doctest::Contains("padding"), parse_error);
}

TEST_CASE("round trips on random graphs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 80; ++round) {
        Graph g = corpus::random_graph(rng, 0, 12);
        Graph via_edges = parse_edge_list(serialize_edge_list(g));
        CHECK(via_edges.same_structure(g));
        Graph via_g6 = parse_graph6(serialize_graph6(g));
        CHECK(via_g6.same_structure(g));
    }
    // larger vertex counts exercise the 3-byte graph6 header
    Graph big = make_path(100);
    CHECK(parse_graph6(serialize_graph6(big)).same_structure(big));
}

TEST_CASE("format detection") {
    CHECK(format_from_extension("a/b/k5.g6") == GraphFormat::graph6);
    CHECK(format_from_extension("k5.edges") == GraphFormat::edge_list);
    CHECK(!format_from_extension("k5.txt").has_value());
}

TEST_CASE("dot export") {
    Graph p3 = make_path(3);
    std::string dot = to_dot(p3, {1});
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(dot.find("fillcolor") != std::string::npos);
}
