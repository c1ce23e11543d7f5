#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epacker/decomposition.hpp"
#include "epacker/generate.hpp"
#include "support/corpus.hpp"

using namespace epk;

TEST_CASE("validate_pd") {
    Graph p3 = make_path(3);
    PathDecomposition good{{{0, 1}, {1, 2}}};
    CHECK(validate_pd(p3, good).ok);
    CHECK(good.width() == 1);

    PathDecomposition uncovered_edge{{{0, 1}, {2}}};
    auto r1 = validate_pd(p3, uncovered_edge);
    CHECK(!r1.ok);
    CHECK(r1.violations.front().find("edge") != std::string::npos);

    Graph two(2, {});
    PathDecomposition gap{{{0}, {1}, {0}}};
    auto r2 = validate_pd(two, gap);
    CHECK(!r2.ok);
    CHECK(r2.violations.front().find("consecutive") != std::string::npos);

    Graph empty(0, {});
    CHECK(validate_pd(empty, PathDecomposition{}).ok);
    CHECK(validate_pd(empty, PathDecomposition{{{}}}).ok);
    CHECK(PathDecomposition{}.width() == -1);
    CHECK(PathDecomposition{{{}}}.width() == -1);
}

TEST_CASE("pathwidth of fixed graphs") {
    CHECK(pathwidth_exact(make_complete(4)).width == 3);
    CHECK(pathwidth_exact(make_path(5)).width == 1);
    CHECK(pathwidth_exact(make_cycle(5)).width == 2);
    CHECK(pathwidth_exact(Graph(0, {})).width == -1);
    CHECK(pathwidth_exact(Graph(4, {})).width == 0);
    CHECK(pathwidth_exact(Graph(1, {})).width == 0);
    for (int n = 2; n <= 8; ++n) CHECK(pathwidth_exact(make_complete(n)).width == n - 1);
    // the complete ternary tree of height p has pathwidth p
    CHECK(pathwidth_exact(make_complete_ternary_tree(1)).width == 1);
    CHECK(pathwidth_exact(make_complete_ternary_tree(2)).width == 2);
}

TEST_CASE("pathwidth of small trees stays below t-1") {
    // P_2 alone needs width 1; from three vertices on, t-2 suffices.
    CHECK(pathwidth_exact(make_path(2)).width == 1);
    for (int t = 3; t <= 6; ++t)
        for (const auto& tree : corpus::all_trees(t))
            CHECK(pathwidth_exact(tree).width <= t - 2);
}

TEST_CASE("pathwidth_exact outputs are valid and deterministic") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        Graph g = corpus::random_graph(rng, 0, 8);
        auto r = pathwidth_exact(g);
        auto v = validate_pd(g, r.pd);
        CHECK(v.ok);
        CHECK(r.pd.width() == r.width);
        auto again = pathwidth_exact(g);
        CHECK(again.pd.bags == r.pd.bags);
    }
}

TEST_CASE("pathwidth monotone under induced subgraphs") {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 30; ++round) {
        Graph g = corpus::random_graph(rng, 1, 8);
        VertexSet s;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() % 2) s.push_back(v);
        CHECK(pathwidth_exact(induced_subgraph(g, s)).width <= pathwidth_exact(g).width);
    }
}

TEST_CASE("pathwidth capacity limit") {
    CHECK_THROWS_AS(pathwidth_exact(make_path(17)), capacity_error);
    DecompositionLimits wide{20};
    CHECK(pathwidth_exact(make_path(17), wide).width == 1);
}

TEST_CASE("constrained decomposition keeps protected vertices in the last bag") {
    Graph p4 = make_path(4);
    auto pd = constrained_path_decomposition(p4, 2, {0});
    REQUIRE(pd.has_value());
    CHECK(validate_pd(p4, *pd).ok);
    CHECK(set_contains(pd->bags.back(), 0));
    // cap 1 cannot cover any edge
    CHECK(!constrained_path_decomposition(p4, 1, {}).has_value());
    // keeping more vertices than the cap allows is infeasible
    CHECK(!constrained_path_decomposition(p4, 1, {0, 3}).has_value());
}

TEST_CASE("prefix_graph") {
    Graph p5 = make_path(5);
    PathDecomposition pd{{{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
    REQUIRE(validate_pd(p5, pd).ok);
    CHECK(prefix_graph(p5, pd, 4).same_structure(p5));
    CHECK(prefix_graph(p5, pd, 1).same_structure(make_path(2)));
    Graph p3 = prefix_graph(p5, pd, 2);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK_THROWS_AS(prefix_graph(p5, pd, 0), domain_error);
    CHECK_THROWS_AS(prefix_graph(p5, pd, 5), domain_error);
}

namespace {

void check_region_contract(const Graph& g, int t, const Tree& tree, const BoundedRegion& region) {
    Graph inside = induced_subgraph(g, region.region);
    // bags must live inside the region and decompose it validly
    PathDecomposition local;
    for (const auto& bag : region.pd.bags) {
        CHECK(is_subset(bag, region.region));
        VertexSet translated;
        for (int v : bag)
            translated.push_back(static_cast<int>(
                std::lower_bound(region.region.begin(), region.region.end(), v) -
                region.region.begin()));
        local.bags.push_back(translated);
    }
    CHECK(validate_pd(inside, local).ok);
    for (const auto& bag : region.pd.bags) CHECK(static_cast<int>(bag.size()) <= t);
    VertexSet bd = boundary(g, region.region);
    CHECK(is_subset(bd, region.pd.bags.back()));
    CHECK(find_tree_minor(inside, tree).has_value());
}

} // namespace

TEST_CASE("extract_bounded_region fixed examples") {
    SearchBudget budget;

    // pw(P_4) = 1 < 2: the whole graph comes back
    Graph p4 = make_path(4);
    Tree p3(make_path(3));
    auto r1 = extract_bounded_region(p4, 3, {p3}, {0}, budget);
    CHECK(r1.region == all_vertices(p4));
    check_region_contract(p4, 3, p3, r1);

    // K_4 needs a proper region
    Graph k4 = make_complete(4);
    auto r2 = extract_bounded_region(k4, 3, {p3}, {0}, budget);
    check_region_contract(k4, 3, p3, r2);

    Graph c6 = make_cycle(6);
    auto r3 = extract_bounded_region(c6, 3, {p3}, {0}, budget);
    check_region_contract(c6, 3, p3, r3);

    CHECK_THROWS_AS(extract_bounded_region(make_path(17), 2, {p3}, {0}, budget), capacity_error);
}

TEST_CASE("bounded regions obey the contract across the small corpus") {
    SearchBudget budget{100'000'000, 0};
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : corpus::connected_graphs(n)) {
            int pw = pathwidth_exact(g).width;
            for (int t = 2; t <= 4; ++t) {
                for (const auto& tg : corpus::all_trees(t)) {
                    Tree tree(tg);
                    // caller contract: some active pattern has a minor
                    if (pw < t - 1 && !find_tree_minor(g, tree, budget)) continue;
                    auto region = extract_bounded_region(g, t, {tree}, {0}, budget);
                    check_region_contract(g, t, tree, region);
                }
            }
        }
    }
}
