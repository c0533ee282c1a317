#include <doctest.h>

#include <random>

#include "genergy/graph.hpp"
#include "genergy/spectra.hpp"

using namespace genergy;

namespace {

Graph paw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("constructors and degree profiles") {
    Graph p4 = path(4);
    auto prof = degree_profile(p4);
    CHECK(prof.size == 3);
    CHECK(prof.max_degree == 2);
    CHECK(prof.min_degree == 1);
    CHECK(prof.avg_degree.str() == "3/2");
    CHECK(prof.avg_degree.value() == doctest::Approx(1.5));

    auto k4 = degree_profile(complete(4));
    CHECK(k4.size == 6);
    CHECK(k4.max_degree == 3);
    CHECK(k4.min_degree == 3);
    CHECK(k4.avg_degree.str() == "3");

    auto c5 = degree_profile(cycle(5));
    CHECK(c5.size == 5);
    CHECK(c5.avg_degree.value() == doctest::Approx(2.0));

    auto star = degree_profile(complete_bipartite(1, 3));
    CHECK(star.max_degree == 3);
    CHECK(star.min_degree == 1);

    CHECK(path(4).degree(0) == 1);
    CHECK(path(4).degree(1) == 2);
}

TEST_CASE("constructor argument validation") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(63), std::invalid_argument);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

TEST_CASE("degree sum equals twice the edge count on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, 2 + trial % 12);
        auto prof = degree_profile(g);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * prof.size);
        CHECK(prof.min_degree <= prof.avg_degree.value());
        CHECK(prof.avg_degree.value() <= prof.max_degree);
        CHECK(prof.max_degree <= g.order() - 1);
    }
}

TEST_CASE("disjoint union adds orders and sizes") {
    Graph u = disjoint_union(path(4), path(4));
    CHECK(u.order() == 8);
    CHECK(u.size() == 6);
    CHECK_FALSE(is_connected(u));

    Graph v = disjoint_union(complete(3), Graph(1));
    CHECK(v.order() == 4);
    CHECK(v.size() == 3);
    CHECK(degree_profile(v).min_degree == 0);
}

TEST_CASE("energy is additive over disjoint unions") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph a = random_graph(rng, 2 + trial % 6);
        Graph b = random_graph(rng, 2 + (trial * 5) % 6);
        double lhs = energy(disjoint_union(a, b));
        CHECK(lhs == doctest::Approx(energy(a) + energy(b)).epsilon(1e-9));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path(4)));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(disjoint_union(path(4), path(4))));
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(cycle(4)));
    CHECK_FALSE(is_bipartite(cycle(5)));
    CHECK(is_bipartite(path(4)));
    CHECK(is_bipartite(Graph(1)));
    CHECK(is_bipartite(complete_bipartite(3, 4)));
    CHECK_FALSE(is_bipartite(paw()));
}

TEST_CASE("regularity") {
    CHECK(is_regular(cycle(5)) == 2);
    CHECK(is_regular(complete(4)) == 3);
    CHECK(is_regular(Graph(5)) == 0);
    CHECK_FALSE(is_regular(path(4)).has_value());
    CHECK_FALSE(is_regular(paw()).has_value());
}
