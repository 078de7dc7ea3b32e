#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hamlex/product.hpp"
#include "test_support.hpp"

using namespace hamlex;

TEST_CASE("two singleton layers joined give K_2") {
    SimpleGraph g = build_product(ProductSpec(2, empty_graph(1)));
    CHECK(g.order() == 2);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0] == Edge{0, 1});
}

TEST_CASE("two edgeless pair layers give C_4 as K_{2,2}") {
    SimpleGraph g = build_product(ProductSpec(2, empty_graph(2)));
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(2, 3));
}

TEST_CASE("five layers of P_3+3K_1 give 30 vertices and 154 edges") {
    SimpleGraph g = build_product(ProductSpec(5, testing::p3_plus_3k1()));
    CHECK(g.order() == 30);
    CHECK(g.edge_count() == 154);  // 5 layers x 2 edges + 4 joins x 36
}

TEST_CASE("flatten and unflatten are inverse bijections") {
    CHECK(flatten(1, 0, 6) == 0);
    CHECK(flatten(3, 2, 6) == 14);
    CHECK(unflatten(14, 6) == ProductVertex{3, 2});
    for (int n : {1, 2, 5}) {
        for (int layer = 1; layer <= 4; ++layer)
            for (int inner = 0; inner < n; ++inner) {
                const int idx = flatten(layer, inner, n);
                CHECK(unflatten(idx, n) == ProductVertex{layer, inner});
            }
    }
    CHECK_THROWS_AS(flatten(1, 6, 6), std::invalid_argument);
    CHECK_THROWS_AS(flatten(0, 0, 6), std::invalid_argument);
    CHECK_THROWS_AS(unflatten(-1, 6), std::invalid_argument);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(ProductSpec({empty_graph(2), empty_graph(3)}), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec(std::vector<SimpleGraph>{}), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec(0, empty_graph(2)), std::invalid_argument);
}

TEST_CASE("adjacency matches the definition on random specs") {
    std::mt19937 rng(67);
    for (int round = 0; round < 30; ++round) {
        const int m = 1 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<SimpleGraph> layers;
        for (int i = 0; i < m; ++i) layers.push_back(testing::random_graph(rng, n, 0.4));
        ProductSpec spec(layers);
        SimpleGraph g = build_product(spec);
        CHECK(g.order() == m * n);

        std::size_t layer_edges = 0;
        for (const SimpleGraph& h : layers) layer_edges += h.edge_count();
        CHECK(g.edge_count() == layer_edges + static_cast<std::size_t>((m - 1) * n * n));

        for (int fu = 0; fu < g.order(); ++fu)
            for (int fv = fu + 1; fv < g.order(); ++fv) {
                const ProductVertex u = unflatten(fu, n);
                const ProductVertex v = unflatten(fv, n);
                CHECK(g.has_edge(fu, fv) == product_adjacent(spec, u, v));
            }
    }
}

TEST_CASE("uniform layers reproduce the classical product edge set") {
    std::mt19937 rng(71);
    for (int round = 0; round < 20; ++round) {
        const int m = 2 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 4);
        SimpleGraph h = testing::random_graph(rng, n, 0.5);
        SimpleGraph g = build_product(ProductSpec(m, h));
        for (int fu = 0; fu < g.order(); ++fu)
            for (int fv = fu + 1; fv < g.order(); ++fv) {
                const ProductVertex u = unflatten(fu, n);
                const ProductVertex v = unflatten(fv, n);
                const bool classical =
                    (std::abs(u.layer - v.layer) == 1) || (u.layer == v.layer && h.has_edge(u.inner, v.inner));
                CHECK(g.has_edge(fu, fv) == classical);
            }
    }
}
