#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epacker/generate.hpp"
#include "epacker/minors.hpp"
#include "epacker/oracles.hpp"
#include "support/corpus.hpp"

using namespace epk;

TEST_CASE("tree and forest constructors validate") {
    CHECK_THROWS_AS(Tree(make_cycle(3)), domain_error);
    CHECK_THROWS_AS(Tree(Graph(2, {})), domain_error); // disconnected
    CHECK_THROWS_AS(Tree(Graph(0, {})), domain_error);
    CHECK(Tree(Graph(1, {})).t() == 1);

    Graph fg = disjoint_union(make_path(3), make_path(2));
    Forest f(fg);
    CHECK(f.component_count() == 2);
    CHECK(f.components()[0].t() == 2); // ascending
    CHECK(f.components()[1].t() == 3);
    CHECK(f.total_vertices() == 5);
    CHECK(f.max_component_size() == 3);
    CHECK_THROWS_AS(Forest(make_cycle(4)), domain_error);
}

TEST_CASE("validate_model") {
    Tree p3(make_path(3));
    Graph k3 = make_complete(3);
    MinorModel good{{{0}, {1}, {2}}};
    CHECK(validate_model(k3, p3, good).ok);

    MinorModel overlap{{{0}, {0}, {2}}};
    auto r1 = validate_model(k3, p3, overlap);
    CHECK(!r1.ok);
    CHECK(r1.violations.front().find("share") != std::string::npos);

    // P_3 pattern a-b-c into host path 0-1-2 with b at the far end
    Graph host = make_path(3);
    MinorModel scrambled{{{0}, {2}, {1}}};
    auto r2 = validate_model(host, p3, scrambled);
    CHECK(!r2.ok);

    MinorModel disconnected{{{0, 2}, {1}, {}}};
    CHECK(!validate_model(host, p3, disconnected).ok);
}

TEST_CASE("find_tree_minor fixed cases") {
    CHECK(find_tree_minor(make_complete(4), Tree(make_path(4))).has_value());
    // every minor of a cycle has maximum degree 2
    CHECK(!find_tree_minor(make_cycle(4), Tree(make_star(3))).has_value());
    CHECK(!find_tree_minor(disjoint_union(make_path(2), make_path(2)), Tree(make_path(3)))
               .has_value());
    // single-vertex pattern
    CHECK(find_tree_minor(Graph(1, {}), Tree(Graph(1, {}))).has_value());
    CHECK(!find_tree_minor(Graph(0, {}), Tree(Graph(1, {}))).has_value());
    // a model that needs a two-vertex branch set: star with subdivided legs
    Graph spider = parse_spider();
    CHECK(find_tree_minor(spider, Tree(make_star(4))).has_value());
}

TEST_CASE("returned models are valid and inclusion-minimal") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 60; ++round) {
        Graph g = corpus::random_graph(rng, 1, 8);
        for (int t = 2; t <= 4; ++t) {
            for (const auto& tg : corpus::all_trees(t)) {
                Tree tree(tg);
                auto model = find_tree_minor(g, tree);
                if (!model) continue;
                CHECK(validate_model(g, tree, *model).ok);
                // removing any single vertex breaks some invariant
                for (size_t p = 0; p < model->branch_sets.size(); ++p) {
                    for (int v : model->branch_sets[p]) {
                        if (model->branch_sets[p].size() == 1) continue;
                        MinorModel smaller = *model;
                        smaller.branch_sets[p] = set_difference(smaller.branch_sets[p], {v});
                        CHECK(!validate_model(g, tree, smaller).ok);
                    }
                }
            }
        }
    }
}

TEST_CASE("agreement with the exhaustive partition oracle") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : corpus::all_graphs(n)) {
            for (int t = 1; t <= 4; ++t) {
                for (const auto& tg : corpus::all_trees(t)) {
                    Tree tree(tg);
                    bool search = find_tree_minor(g, tree).has_value();
                    bool brute = has_minor_bruteforce(g, tree);
                    CHECK(search == brute);
                }
            }
        }
    }
}

TEST_CASE("monotone under supergraphs") {
    std::mt19937_64 rng(32);
    for (int round = 0; round < 40; ++round) {
        Graph g = corpus::random_graph(rng, 2, 8);
        VertexSet s;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() % 2) s.push_back(v);
        Graph sub = induced_subgraph(g, s);
        for (const auto& tg : corpus::all_trees(3)) {
            Tree tree(tg);
            if (find_tree_minor(sub, tree)) CHECK(find_tree_minor(g, tree).has_value());
        }
    }
}

TEST_CASE("node budget is a capacity error, not a negative answer") {
    SearchBudget tiny{5, 0};
    Graph g = make_complete(8);
    CHECK_THROWS_AS(find_tree_minor(g, Tree(make_path(4)), tiny), capacity_error);
}

TEST_CASE("find_forest_minor") {
    Forest f23(disjoint_union(make_path(2), make_path(3)));
    auto in_p5 = find_forest_minor(make_path(5), f23);
    REQUIRE(in_p5.has_value());
    REQUIRE(in_p5->size() == 2);
    // models valid and pairwise disjoint
    VertexSet used;
    for (int i = 0; i < 2; ++i) {
        CHECK(validate_model(make_path(5), f23.components()[i], (*in_p5)[i]).ok);
        for (const auto& bs : (*in_p5)[i]) {
            CHECK(set_intersection(used, bs).empty());
            used = set_union(used, bs);
        }
    }
    CHECK(!find_forest_minor(make_path(4), f23).has_value());

    // single component behaves like the tree search
    Forest single(make_path(3));
    CHECK(find_forest_minor(make_path(5), single).has_value() ==
          find_tree_minor(make_path(5), Tree(make_path(3))).has_value());
}

TEST_CASE("forest search agrees with a tuple-of-subsets oracle") {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 50; ++round) {
        Graph g = corpus::random_graph(rng, 1, 7);
        Graph fg = corpus::random_forest_graph(rng, 5);
        Forest forest(fg);
        bool search = find_forest_minor(g, forest).has_value();

        // oracle: disjoint vertex subsets, one per component, each carrying
        // the component as a minor (checked by the partition oracle)
        int c = forest.component_count();
        std::vector<MinorOracle> oracles;
        oracles.reserve(c);
        for (int i = 0; i < c; ++i) oracles.emplace_back(g, forest.components()[i]);
        int n = g.vertex_count();
        std::function<bool(int, std::uint32_t)> place = [&](int i, std::uint32_t used) {
            if (i == c) return true;
            std::uint32_t free = (n == 32 ? ~0u : ((1u << n) - 1)) & ~used;
            for (std::uint32_t s = free;; s = (s - 1) & free) {
                if (s != 0 && oracles[i].has_minor_within(epk::bits::from_mask(s)) &&
                    place(i + 1, used | s))
                    return true;
                if (s == 0) break;
            }
            return false;
        };
        bool brute = place(0, 0);
        CHECK(search == brute);
    }
}

TEST_CASE("model serialization format") {
    Graph host(3, {{0, 1}, {1, 2}}, {10, 20, 30});
    MinorModel model{{{0, 1}, {2}}};
    CHECK(format_model(host, model) == "0: {10, 20}\n1: {30}\n");
}
