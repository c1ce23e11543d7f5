#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epacker/generate.hpp"
#include "epacker/graph.hpp"
#include "support/corpus.hpp"

using namespace epk;

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), domain_error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), domain_error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), domain_error); // parallel
    CHECK_THROWS_AS(Graph(2, {}, {5, 5}), domain_error);       // duplicate labels
    Graph g(3, {{1, 0}, {2, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("induced subgraph") {
    Graph k4 = make_complete(4);
    Graph k3 = induced_subgraph(k4, {0, 2, 3});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.labels() == std::vector<int>{0, 2, 3});

    Graph p4 = make_path(4);
    Graph pair = induced_subgraph(p4, {0, 2});
    CHECK(pair.edge_count() == 0);

    Graph c5 = make_cycle(5);
    Graph seg = induced_subgraph(c5, {1, 2, 3});
    CHECK(seg.edge_count() == 2); // P_3

    CHECK_THROWS_AS(induced_subgraph(k4, {0, 9}), domain_error);
}

TEST_CASE("remove_vertices") {
    Graph k5 = make_complete(5);
    CHECK(remove_vertices(k5, {0, 1}).edge_count() == 3);
    CHECK(remove_vertices(k5, {}).same_structure(k5));
    CHECK(remove_vertices(k5, all_vertices(k5)).vertex_count() == 0);
    CHECK(remove_vertices(k5, {4}).same_structure(make_complete(4)));
}

TEST_CASE("boundary") {
    Graph p3 = make_path(3);
    CHECK(boundary(p3, {0, 1}) == VertexSet{1});
    CHECK(boundary(p3, all_vertices(p3)) == VertexSet{});
    Graph k4 = make_complete(4);
    CHECK(boundary(k4, {1, 2}) == VertexSet{1, 2});
}

TEST_CASE("connected components") {
    Graph two = disjoint_union(make_complete(3), make_complete(2));
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 2);

    Graph edgeless(4, {});
    CHECK(connected_components(edgeless).size() == 4);
    CHECK(connected_components(make_cycle(6)).size() == 1);
}

TEST_CASE("generators") {
    CHECK(make_complete(5).edge_count() == 10);
    Graph t1 = make_complete_ternary_tree(1);
    CHECK(t1.vertex_count() == 4);
    CHECK(t1.degree(0) == 3);
    Graph t2 = make_complete_ternary_tree(2);
    CHECK(t2.vertex_count() == 13); // 1 + 3 + 9
    CHECK(t2.edge_count() == 12);
    int leaves = 0;
    for (int v = 0; v < 13; ++v)
        if (t2.degree(v) == 1) ++leaves;
    CHECK(leaves == 9);

    Graph r1 = make_erdos_renyi(8, 0.5, 42);
    Graph r2 = make_erdos_renyi(8, 0.5, 42);
    CHECK(r1.same_structure(r2));
    bool differs = false;
    for (std::uint64_t seed = 1; seed < 6 && !differs; ++seed)
        differs = !make_erdos_renyi(8, 0.5, seed).same_structure(r1);
    CHECK(differs);

    CHECK_THROWS_AS(make_cycle(2), domain_error);
    CHECK_THROWS_AS(make_complete(-1), domain_error);
}

TEST_CASE("disjoint union keeps labels unique") {
    Graph u = disjoint_union(make_path(2), make_path(3));
    CHECK(u.vertex_count() == 5);
    auto labels = u.labels();
    std::sort(labels.begin(), labels.end());
    CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
}

TEST_CASE("set operation properties on random graphs") {
    std::mt19937_64 rng(20240901);
    for (int round = 0; round < 60; ++round) {
        Graph g = corpus::random_graph(rng, 1, 9);
        VertexSet s;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() % 2) s.push_back(v);

        VertexSet bd = boundary(g, s);
        CHECK(is_subset(bd, s));
        CHECK(boundary(g, all_vertices(g)).empty());

        Graph rest = remove_vertices(g, s);
        Graph same = induced_subgraph(g, set_difference(all_vertices(g), s));
        CHECK(rest.same_structure(same));
        for (int v : s)
            for (int u = 0; u < rest.vertex_count(); ++u) CHECK(rest.label_of(u) != v);

        auto comps = connected_components(g);
        VertexSet glued;
        for (const auto& c : comps) {
            CHECK(is_connected(induced_subgraph(g, c)));
            for (int v : c) glued.push_back(v);
        }
        std::sort(glued.begin(), glued.end());
        CHECK(glued == all_vertices(g));
    }
}

TEST_CASE("corpus enumerator matches the known class counts") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(corpus::all_graphs(n).size() == static_cast<size_t>(corpus::kGraphCounts[n - 1]));
        CHECK(corpus::connected_graphs(n).size() ==
              static_cast<size_t>(corpus::kConnectedCounts[n - 1]));
        CHECK(corpus::all_trees(n).size() == static_cast<size_t>(corpus::kTreeCounts[n - 1]));
    }
}
