#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hamlex/linear_forest.hpp"
#include "hamlex/oracle.hpp"
#include "test_support.hpp"

using namespace hamlex;

TEST_CASE("pi on named graphs") {
    CHECK(pi(testing::p3_plus_3k1()) == 2);
    for (int n = 1; n <= 8; ++n) CHECK(pi(path_graph(n)) == n - 1);
    CHECK(pi(empty_graph(5)) == 0);
    CHECK(pi(cycle_graph(5)) == brute_pi(cycle_graph(5)));
    CHECK(pi(cycle_graph(5)) == 4);
    CHECK(pi(star_graph(3)) == brute_pi(star_graph(3)));
    CHECK(pi(star_graph(3)) == 2);
}

TEST_CASE("pi refuses oversized instances") {
    CHECK_THROWS_AS(pi(empty_graph(pi_search_limit() + 1)), InstanceTooLarge);
}

TEST_CASE("pi matches the brute oracle on small corpora") {
    std::mt19937 rng(23);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        SimpleGraph g = testing::random_graph(rng, n, 0.1 + 0.08 * static_cast<double>(rng() % 10));
        CHECK(pi(g) == brute_pi(g));
    }
    for (int n = 1; n <= 4; ++n)
        for (const SimpleGraph& g : testing::nonisomorphic_graphs(n)) CHECK(pi(g) == brute_pi(g));
}

TEST_CASE("pi is monotone under edge additions") {
    std::mt19937 rng(31);
    for (int round = 0; round < 120; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        SimpleGraph g = testing::random_graph(rng, n, 0.3);
        const Vertex u = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        if (u == v) continue;
        if (g.has_edge(u, v)) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
        edges.emplace_back(u, v);
        SimpleGraph bigger(n, edges);
        CHECK(pi(bigger) >= pi(g));
    }
}

TEST_CASE("pi equals n-1 exactly on traceable graphs") {
    std::mt19937 rng(37);
    for (int round = 0; round < 150; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        SimpleGraph g = testing::random_graph(rng, n, 0.45);
        CHECK((pi(g) == n - 1) == brute_traceable(g));
    }
}

TEST_CASE("max forest is a valid witness with canonical tie-breaking") {
    std::mt19937 rng(41);
    for (int round = 0; round < 120; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        SimpleGraph g = testing::random_graph(rng, n, 0.4);
        LinearForest f = max_linear_forest(g);
        CHECK(f.edge_count() == pi(g));
        CHECK(testing::is_valid_linear_forest_of(g, f));
        LinearForest again = max_linear_forest(g);
        CHECK(f.components() == again.components());
    }
    // lex tie-break: C_4 has four maximum forests; the smallest edge set
    // is {01, 03, 12}, the path 2-1-0-3.
    LinearForest f = max_linear_forest(cycle_graph(4));
    CHECK(f.edge_set() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("constrained forest worked examples") {
    // P_4 with 3 edges and terminal 0: the path itself qualifies.
    LinearForest whole = constrained_forest(path_graph(4), {3, {0}, std::nullopt});
    CHECK(whole.edge_count() == 3);
    CHECK(whole.forest_degree(0) == 1);

    // P_3 with one edge and the middle vertex terminal.
    LinearForest mid = constrained_forest(path_graph(3), {1, {1}, std::nullopt});
    CHECK(mid.edge_count() == 1);
    CHECK(mid.forest_degree(1) <= 1);
    CHECK(testing::is_valid_linear_forest_of(path_graph(3), mid));

    // K_3 with one edge and 0, 1 separated.
    LinearForest sep = constrained_forest(complete_graph(3), {1, {}, std::make_pair(0, 1)});
    CHECK(sep.edge_count() == 1);
    CHECK(testing::is_valid_linear_forest_of(complete_graph(3), sep));
    bool same_component = false;
    for (const auto& comp : sep.components()) {
        bool has0 = std::find(comp.begin(), comp.end(), 0) != comp.end();
        bool has1 = std::find(comp.begin(), comp.end(), 1) != comp.end();
        if (has0 && has1) same_component = true;
    }
    CHECK_FALSE(same_component);
}

TEST_CASE("constrained maximum matches exhaustive enumeration") {
    std::mt19937 rng(47);
    for (int round = 0; round < 150; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        SimpleGraph g = testing::random_graph(rng, n, 0.5);
        if (g.edge_count() > 12) continue;
        const Vertex x = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        Vertex y = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        std::vector<Vertex> terminals{x};
        std::optional<std::pair<Vertex, Vertex>> sep;
        if (y != x && round % 2 == 0) {
            terminals.push_back(y);
            sep = std::make_pair(x, y);
        }
        CHECK(constrained_pi(g, terminals, sep) == testing::enumerate_constrained_max(g, terminals, sep));
    }
}

TEST_CASE("constrained forest satisfies every clause at every feasible size") {
    std::mt19937 rng(53);
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        SimpleGraph g = testing::random_graph(rng, n, 0.5);
        const Vertex x = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        const Vertex y = (x + 1) % n;
        ForestConstraints c;
        c.terminal_vertices = {x, y};
        c.separated_pair = std::make_pair(x, y);
        const int cmax = constrained_pi(g, c.terminal_vertices, c.separated_pair);
        for (int target = 0; target <= cmax; ++target) {
            c.exact_edges = target;
            LinearForest f = constrained_forest(g, c);
            CHECK(f.edge_count() == target);
            CHECK(testing::is_valid_linear_forest_of(g, f));
            CHECK(f.forest_degree(x) <= 1);
            CHECK(f.forest_degree(y) <= 1);
            CHECK(f.component_of(x) != f.component_of(y));
        }
        c.exact_edges = cmax + 1;
        CHECK_THROWS_AS(constrained_forest(g, c), InfeasibleConstraints);
    }
}

TEST_CASE("single-terminal constraint costs at most one edge") {
    std::mt19937 rng(59);
    for (int round = 0; round < 120; ++round) {
        const int n = 2 + static_cast<int>(rng() % 6);
        SimpleGraph g = testing::random_graph(rng, n, 0.4);
        const Vertex x = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        CHECK(constrained_pi(g, {x}) >= pi(g) - 1);
        CHECK(constrained_pi(g, {x}) <= pi(g));
    }
}
