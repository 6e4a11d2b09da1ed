#include <doctest.h>

#include <set>

#include "hcm/errors.hpp"
#include "hcm/generators.hpp"
#include "hcm/graph.hpp"
#include "hcm/structure.hpp"
#include "support/oracles.hpp"

using namespace hcm;

TEST_SUITE_BEGIN("graph");

TEST_CASE("edge-list parsing") {
    Graph p3 = load_graph("p 3 2\ne 0 1\ne 1 2\n");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK(!p3.adjacent(0, 2));

    Graph k1 = load_graph("p 1 0\n");
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    CHECK_THROWS_AS(load_graph("e 0 0\n"), parse_error);
    CHECK_THROWS_AS(load_graph("p 2 1\ne 0 5\n"), parse_error);
    CHECK_THROWS_AS(load_graph("p 2 1\nhello\n"), parse_error);

    // line numbers surface in the message
    try {
        load_graph("c fine\ne 0 1\ne 2 2\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }

    // bare pairs accepted without a header; duplicates collapse
    Graph bare = load_graph("0 1\n1 2\n1 0\n");
    CHECK(bare.vertex_count() == 3);
    CHECK(bare.edge_count() == 2);
}

TEST_CASE("writer emits sorted canonical form") {
    Graph g = load_graph("2 1\n0 1\n");
    CHECK(write_graph(g) == "p 3 2\ne 0 1\ne 1 2\n");
    // full round trip
    Graph h = load_graph(write_graph(g));
    CHECK(write_graph(h) == write_graph(g));
}

TEST_CASE("induced subgraphs relabel in sorted order") {
    Graph c5 = cycle_graph(5);
    Graph p3 = induced_subgraph(c5, {0, 1, 2});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));

    Graph nothing = induced_subgraph(c5, std::vector<int>{});
    CHECK(nothing.vertex_count() == 0);

    Graph k3 = induced_subgraph(complete_graph(4), {0, 1, 2});
    CHECK(k3.edge_count() == 3);

    CHECK_THROWS_AS(induced_subgraph(c5, {0, 9}), std::out_of_range);
}

TEST_CASE("neighbourhood graphs") {
    CHECK(neighbourhood_graph(complete_graph(4), 0).edge_count() == 3);
    Graph c5n = neighbourhood_graph(cycle_graph(5), 0);
    CHECK(c5n.vertex_count() == 2);
    CHECK(c5n.edge_count() == 0);
    Graph petersen = kneser_graph(5, 2);
    Graph pn = neighbourhood_graph(petersen, 0);
    CHECK(pn.vertex_count() == 3);
    CHECK(pn.edge_count() == 0);  // girth five
}

TEST_CASE("max_average_degree exact values") {
    CHECK(max_average_degree(complete_graph(4)) == Rational(3));
    CHECK(max_average_degree(cycle_graph(5)) == Rational(2));
    CHECK(max_average_degree(complete_bipartite(1, 5)) == Rational(5, 3));
    CHECK_THROWS_AS(max_average_degree(Graph(0, {})), regime_error);
    CHECK(max_average_degree(Graph(3, {})) == Rational(0));
}

TEST_CASE("max_average_degree matches subset enumeration on random graphs") {
    Rng rng = make_rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + uniform_below(rng, 9);  // up to 11
        Graph g = erdos_renyi(n, 0.2 + 0.06 * uniform_below(rng, 9), rng);
        if (g.edge_count() == 0) continue;
        CHECK(max_average_degree(g) == oracle::brute_mad(g));
    }
}

TEST_CASE("mad bounds") {
    Rng rng = make_rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + uniform_below(rng, 10);
        Graph g = erdos_renyi(n, 0.35, rng);
        Rational mad = max_average_degree(g);
        Rational density(2 * g.edge_count(), std::max(1, g.vertex_count()));
        density.canonicalize();
        CHECK(mad >= density);
        int dgn = degeneracy(g);
        CHECK(Rational(dgn) <= mad);
        if (g.edge_count() > 0) CHECK(mad < Rational(2 * dgn));
    }
    // regular graphs: mad equals the degree
    Graph cube = random_regular(10, 3, rng);
    CHECK(max_average_degree(cube) == Rational(3));
}

TEST_CASE("hall_ratio") {
    CHECK(hall_ratio(complete_graph(5)) == Rational(5));
    CHECK(hall_ratio(cycle_graph(5)) == Rational(5, 2));
    CHECK(hall_ratio(Graph(4, {})) == Rational(1));
    CHECK_THROWS_AS(hall_ratio(Graph(30, {})), cap_error);

    Rng rng = make_rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + uniform_below(rng, 8);
        Graph g = erdos_renyi(n, 0.4, rng);
        CHECK(hall_ratio(g) == oracle::brute_hall(g));
    }
}

TEST_CASE("clique_number") {
    CHECK(clique_number(complete_bipartite(3, 3)) == 2);
    CHECK(clique_number(kneser_graph(5, 2)) == 2);
    CHECK(clique_number(complete_graph(7)) == 7);
    Rng rng = make_rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + uniform_below(rng, 10);
        Graph g = erdos_renyi(n, 0.5, rng);
        CHECK(clique_number(g) == oracle::brute_clique(g));
    }
}

TEST_CASE("parameter chain omega <= rho <= Delta + 1") {
    Rng rng = make_rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + uniform_below(rng, 8);
        Graph g = erdos_renyi(n, 0.4, rng);
        Rational rho = hall_ratio(g);
        CHECK(Rational(clique_number(g)) <= rho);
        CHECK(rho <= Rational(g.max_degree() + 1));
    }
}

TEST_CASE("local_path_count") {
    CHECK(local_path_count(complete_graph(4), 0, 3) == 3);
    CHECK(local_path_count(cycle_graph(5), 0, 3) == 0);
    CHECK(local_path_count(complete_graph(5), 0, 4) == 12);
}

TEST_CASE("generators") {
    Graph petersen = kneser_graph(5, 2);
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(petersen.max_degree() == 3);

    Rng rng = make_rng(1);
    Graph reg = random_regular(10, 3, rng);
    for (int v = 0; v < 10; ++v) CHECK(reg.degree(v) == 3);
    CHECK_THROWS_AS(random_regular(5, 3, rng), regime_error);  // nd odd

    Graph kb = complete_bipartite(3, 3);
    CHECK(kb.edge_count() == 9);
    CHECK(clique_number(kb) == 2);

    // determinism under a fixed seed
    Rng r1 = make_rng(42), r2 = make_rng(42);
    CHECK(write_graph(erdos_renyi(12, 0.3, r1)) == write_graph(erdos_renyi(12, 0.3, r2)));

    Graph blown = blow_up(complete_graph(2), 3);
    CHECK(blown.vertex_count() == 6);
    CHECK(blown.edge_count() == 9);

    Rng r3 = make_rng(9);
    Graph spec = generate("blowup(cycle(5),2)", r3);
    CHECK(spec.vertex_count() == 10);
    CHECK(spec.edge_count() == 20);
    CHECK_THROWS_AS(generate("mystery(3)", r3), parse_error);
}

TEST_CASE("triangle-free generator stays triangle-free within the degree cap") {
    Rng rng = make_rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_triangle_free(20, 6, 0.5, rng);
        CHECK(g.max_degree() <= 6);
        for (int u = 0; u < g.vertex_count(); ++u)
            CHECK(neighbourhood_graph(g, u).edge_count() == 0);
    }
}

TEST_SUITE_END();
