#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hamlex/graph.hpp"
#include "hamlex/serialization.hpp"
#include "test_support.hpp"

using namespace hamlex;

TEST_CASE("degree on small graphs") {
    CHECK(complete_graph(2).degree(0) == 1);
    CHECK(empty_graph(3).degree(2) == 0);
    CHECK(path_graph(3).degree(1) == 2);
    CHECK_THROWS_AS(path_graph(3).degree(3), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(3).degree(-1), std::invalid_argument);
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(SimpleGraph(0), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("edges are normalized and sorted") {
    SimpleGraph g(4, {{3, 2}, {1, 0}});
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{2, 3});
    CHECK(g.has_edge(2, 3));
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("disjoint union shifts the second operand") {
    SimpleGraph h = testing::p3_plus_3k1();
    CHECK(h.order() == 6);
    REQUIRE(h.edge_count() == 2);
    CHECK(h.edges()[0] == Edge{0, 1});
    CHECK(h.edges()[1] == Edge{1, 2});

    SimpleGraph two = disjoint_union(empty_graph(1), empty_graph(1));
    CHECK(two.order() == 2);
    CHECK(two.edge_count() == 0);

    SimpleGraph pair = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(pair.order() == 4);
    REQUIRE(pair.edge_count() == 2);
    CHECK(pair.edges()[0] == Edge{0, 1});
    CHECK(pair.edges()[1] == Edge{2, 3});
}

TEST_CASE("disjoint union preserves vertex and edge counts") {
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        SimpleGraph a = testing::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.5);
        SimpleGraph b = testing::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.5);
        SimpleGraph u = disjoint_union(a, b);
        CHECK(u.order() == a.order() + b.order());
        CHECK(u.edge_count() == a.edge_count() + b.edge_count());
    }
}

TEST_CASE("multigraph degree identity") {
    PathMultigraph gm({2, 2}, {1, 0, 1});
    CHECK(multigraph_degree(gm, 1) == 4);
    CHECK(multigraph_degree(gm, 2) == 4);
    CHECK(multigraph_degree(gm, 3) == 4);
    CHECK(gm.loopless_degree(1) == 2);
    CHECK_THROWS_AS(multigraph_degree(gm, 0), std::invalid_argument);
    CHECK_THROWS_AS(multigraph_degree(gm, 4), std::invalid_argument);

    PathMultigraph single({4}, {0, 0});
    CHECK(multigraph_degree(single, 1) == 4);
    CHECK(single.is_connected());
    CHECK_FALSE(PathMultigraph({0}, {0, 0}).is_connected());
}

TEST_CASE("multigraph shape validation") {
    CHECK_THROWS_AS(PathMultigraph({1, 2}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PathMultigraph({-1}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PathMultigraph({1}, {0, -2}), std::invalid_argument);
    CHECK_THROWS_AS(PathMultigraph({}, {}), std::invalid_argument);
}

TEST_CASE("linear forest invariants") {
    LinearForest f(4, {{1, 0}, {2, 3}});
    CHECK(f.edge_count() == 2);
    CHECK(f.component_count() == 2);
    // canonical: oriented lower endpoint first, sorted by smallest vertex
    CHECK(f.components()[0] == std::vector<Vertex>{0, 1});
    CHECK(f.components()[1] == std::vector<Vertex>{2, 3});
    CHECK(f.forest_degree(0) == 1);

    LinearForest singletons(3, {{0}, {1}, {2}});
    CHECK(singletons.edge_count() == 0);
    CHECK(singletons.forest_degree(1) == 0);

    CHECK_THROWS_AS(LinearForest(3, {{0, 1}}), std::invalid_argument);          // vertex 2 missing
    CHECK_THROWS_AS(LinearForest(3, {{0, 1}, {1, 2}}), std::invalid_argument);  // 1 repeated
    CHECK_THROWS_AS(LinearForest(2, {{0, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(LinearForest(2, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("graph JSON round trip is canonical") {
    std::mt19937 rng(11);
    for (int round = 0; round < 40; ++round) {
        SimpleGraph g = testing::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.4);
        SimpleGraph back = graph_from_json(graph_to_json(g));
        CHECK(back == g);
    }
    json j = graph_to_json(testing::p3_plus_3k1());
    CHECK(j["n"] == 6);
    CHECK(j["edges"] == json::parse("[[0,1],[1,2]]"));
}

TEST_CASE("product spec JSON accepts both layer forms") {
    const json uniform{{"m", 3}, {"layer", graph_to_json(complete_graph(2))}};
    const ProductSpec a = product_spec_from_json(uniform);
    CHECK(a.length() == 3);
    CHECK(a.layer(2) == complete_graph(2));

    json explicit_form{{"m", 2},
                       {"layers", json::array({graph_to_json(complete_graph(2)),
                                               graph_to_json(empty_graph(2))})}};
    const ProductSpec b = product_spec_from_json(explicit_form);
    CHECK(b.length() == 2);
    CHECK(b.layer(1) == complete_graph(2));
    CHECK(b.layer(2) == empty_graph(2));
    CHECK(product_spec_from_json(product_spec_to_json(b)).layers() == b.layers());

    CHECK_THROWS_AS(product_spec_from_json(json{{"m", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(
        product_spec_from_json(json{{"m", 3}, {"layers", explicit_form["layers"]}}),
        std::invalid_argument);
}

TEST_CASE("graph JSON parsing rejects malformed input") {
    CHECK_THROWS_AS(graph_from_json(json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse("{\"n\": 2, \"edges\": [[0]]}")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse("{\"n\": 2, \"edges\": [[0, 2]]}")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse("{\"n\": 2, \"edges\": [[0, 0]]}")), std::invalid_argument);
}
