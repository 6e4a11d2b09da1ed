#include <doctest.h>

#include <cmath>

#include "hcm/bounds.hpp"
#include "hcm/errors.hpp"
#include "hcm/generators.hpp"
#include "hcm/ipoly.hpp"
#include "hcm/lambert.hpp"
#include "hcm/occupancy.hpp"
#include "hcm/structure.hpp"

using namespace hcm;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("setting validation") {
    CHECK_THROWS_AS(SparsitySetting::ck_free(2), regime_error);
    CHECK_THROWS_AS(SparsitySetting::triangle_count(0.4), regime_error);
    CHECK_THROWS_AS(SparsitySetting::hall_ratio(0.9), regime_error);
    CHECK_THROWS_AS(SparsitySetting::clique(2), regime_error);
    CHECK(SparsitySetting::path_count(3, 0.5).mad_exponent() == doctest::Approx(1.0));
}

TEST_CASE("triangle-free occupancy bound at Delta=1 peaks at the boundary") {
    auto r = occupancy_lower_bound(SparsitySetting::triangle_free(), 1, 1.0);
    double expected = 0.5 * lambert_w0(std::log(2.0)) / std::log(2.0);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-9));
    CHECK(r.maximizer == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("forbidden triangle equals forbidden 3-cycle") {
    for (int Delta : {2, 5, 16, 100})
        for (double lambda : {0.2, 1.0, 3.0}) {
            auto a = occupancy_lower_bound(SparsitySetting::triangle_free(), Delta, lambda);
            auto b = occupancy_lower_bound(SparsitySetting::ck_free(3), Delta, lambda);
            CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
        }
}

TEST_CASE("fewer triangles give a stronger bound") {
    auto lo = occupancy_lower_bound(SparsitySetting::triangle_count(0.5), 8, 1.0);
    auto hi = occupancy_lower_bound(SparsitySetting::triangle_count(2.0), 8, 1.0);
    CHECK(lo.value >= hi.value);
}

TEST_CASE("occupancy bound is non-decreasing in lambda") {
    for (auto setting : {SparsitySetting::triangle_free(), SparsitySetting::ck_free(5),
                         SparsitySetting::hall_ratio(2.0)}) {
        double prev = 0;
        for (double lambda = 0.1; lambda <= 2.0; lambda += 0.1) {
            double v = occupancy_lower_bound(setting, 12, lambda).value;
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("clique occupancy bound is the pinned two-arm form") {
    auto r = occupancy_lower_bound(SparsitySetting::clique(4), 100, 1.0);
    double ld = std::log(100.0);
    double arm1 = ld / (2 * 100 * std::log(ld));
    double arm2 = 0.5 / 100 * std::sqrt(ld / std::log(3.0));
    CHECK(r.value == doctest::Approx(std::max(arm1, arm2)));
    CHECK(r.o1_set_to_one);
}

TEST_CASE("exact occupancy dominates the bound when hypotheses hold") {
    Rng rng = make_rng(31);
    std::vector<Graph> graphs{kneser_graph(5, 2), cycle_graph(9), complete_bipartite(4, 4)};
    for (int i = 0; i < 4; ++i) graphs.push_back(random_regular(12, 3, rng));
    for (const auto& g : graphs) {
        int Delta = g.max_degree();
        long long worst_edges = 0;
        double worst_rho = 1.0;
        int worst_path4 = 0;
        for (int u = 0; u < g.vertex_count(); ++u) {
            Graph nb = neighbourhood_graph(g, u);
            worst_edges = std::max<long long>(worst_edges, nb.edge_count());
            if (nb.vertex_count() > 0)
                worst_rho = std::max(worst_rho, hall_ratio(nb).get_d());
            worst_path4 = std::max<int>(worst_path4,
                                        static_cast<int>(local_path_count(g, u, 4)));
        }
        for (double lambda : {0.5, 1.0}) {
            double occ = occupancy_fraction(g, lambda);
            if (worst_edges == 0) {
                CHECK(occ >= occupancy_lower_bound(SparsitySetting::triangle_free(), Delta, lambda)
                                 .value -
                             1e-12);
                CHECK(occ >= occupancy_lower_bound(SparsitySetting::ck_free(3), Delta, lambda)
                                 .value -
                             1e-12);
            }
            double t = std::max(0.5, static_cast<double>(worst_edges));
            CHECK(occ >=
                  occupancy_lower_bound(SparsitySetting::triangle_count(t), Delta, lambda).value -
                      1e-12);
            double tp = std::max(0.5, static_cast<double>(worst_path4));
            CHECK(occ >=
                  occupancy_lower_bound(SparsitySetting::path_count(4, tp), Delta, lambda).value -
                      1e-12);
            CHECK(occ >=
                  occupancy_lower_bound(SparsitySetting::hall_ratio(worst_rho), Delta, lambda)
                          .value -
                      1e-12);
        }
    }
}

TEST_CASE("path-count collapses to triangle-count at k=3") {
    for (double t : {0.5, 2.0, 7.0})
        for (int Delta : {6, 20})
            for (double lambda : {0.5, 1.0}) {
                auto a = occupancy_lower_bound(SparsitySetting::path_count(3, t), Delta, lambda);
                auto b = occupancy_lower_bound(SparsitySetting::triangle_count(t), Delta, lambda);
                CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
            }
    // the budget scales differ (k + sqrt(t) versus sqrt(t)), so the path
    // budget can only be weaker
    BudgetParams p;
    p.deg = 200;
    p.delta0 = 16;
    p.eps = 0.1;
    p.mode = BudgetMode::Fractional;
    for (double t : {0.5, 2.0, 7.0}) {
        double pc = chromatic_budget(SparsitySetting::path_count(3, t), p);
        double tc = chromatic_budget(SparsitySetting::triangle_count(t), p);
        CHECK(pc >= tc - 1e-12);
    }
}

TEST_CASE("budget displays evaluate literally") {
    BudgetParams p;
    p.deg = 1000;
    p.delta0 = 16;
    p.eps = 0.05;
    p.mode = BudgetMode::Fractional;
    // forbidden-cycle fractional form
    double v = chromatic_budget(SparsitySetting::ck_free(5), p);
    double arm1 = 1000.0 / std::log(1000.0 / 5.0);
    double arm2 = 16.0 / std::log(16.0) * 5.0;
    CHECK(v == doctest::Approx(1.05 * std::max(arm1, arm2)));
    // the deg arm scales like deg / log(deg/k) on a grid
    for (double deg : {300.0, 3000.0, 30000.0}) {
        p.deg = deg;
        double b = chromatic_budget(SparsitySetting::ck_free(5), p);
        CHECK(b == doctest::Approx(1.05 * std::max(deg / std::log(deg / 5.0),
                                                   16.0 / std::log(16.0) * 5.0)));
    }
    // eps = 0 leaves the bare maximum
    p.eps = 0.0;
    p.deg = 1000;
    CHECK(chromatic_budget(SparsitySetting::ck_free(5), p) ==
          doctest::Approx(std::max(arm1, arm2)));
    // hall list form
    p.mode = BudgetMode::List;
    p.Delta = 4096;
    p.eps = 0.05;
    double rho = 2.0;
    double K = k_function(rho);
    double logD = std::log(4096.0);
    double delta = 16.0 * rho * logD;
    double h1 = K * 1000.0 / std::log(K * 1000.0 / (rho * logD));
    double h2 = K * delta / std::log(K * delta / (rho * logD));
    CHECK(chromatic_budget(SparsitySetting::hall_ratio(rho), p) ==
          doctest::Approx(1.05 * std::max(h1, h2)));
    // out-of-regime log arguments raise
    p.deg = 3;
    p.mode = BudgetMode::Fractional;
    CHECK_THROWS_AS(chromatic_budget(SparsitySetting::ck_free(5), p), regime_error);
}

TEST_CASE("clique correspondence surplus takes the smaller arm") {
    int Delta = 4096;
    double eps = 0.1;
    double l8 = std::log(8.0 * std::pow(Delta, 4.0));
    for (int omega : {3, 5, 40}) {
        double armA = std::pow(std::exp(2.0) * l8, omega - 1.0);
        double armB = std::exp(std::sqrt(4.0 * std::log(omega - 1.0) * (1 + eps) * l8));
        double k = std::min(armA, armB);
        // feed a deg large enough for positive logs and reproduce the display
        BudgetParams p;
        p.deg = k * 5e4;
        p.delta0 = 30;
        p.Delta = Delta;
        p.eps = eps;
        p.mode = BudgetMode::List;
        double delta = p.delta0 * k;
        double lw = std::log(omega - 1.0);
        double armO = std::max((omega - 2.0) * p.deg * std::log(std::log(p.deg / k)) /
                                   std::log(p.deg / k),
                               (omega - 2.0) * delta * std::log(std::log(p.delta0)) /
                                   std::log(p.delta0));
        double armS = std::max(2.0 * p.deg * std::sqrt(lw / std::log(p.deg / k)),
                               2.0 * delta * std::sqrt(lw / std::log(p.delta0)));
        CHECK(chromatic_budget(SparsitySetting::clique(omega), p) ==
              doctest::Approx((1 + eps) * std::min(armO, armS)).epsilon(1e-12));
    }
}

TEST_CASE("list size threshold") {
    // algebraic reformulation: threshold equals
    // (lambda/(1+lambda)) (ell/(1-eta)) (beta + gamma deg / ((lambda/(1+lambda)) ell/(1-eta)))
    for (double ell : {40.0, 100.0, 1000.0}) {
        double beta = 3.0, gamma = 0.8, deg = 50, lambda = 0.7;
        int Delta = 64;
        double v = list_size_requirement(beta, gamma, deg, lambda, ell, Delta);
        double eta = std::sqrt(7.0 * std::log(64.0) / ell);
        double scale = lambda / (1 + lambda) * ell / (1 - eta);
        CHECK(v == doctest::Approx(scale * (beta + gamma * deg / scale)).epsilon(1e-12));
    }
    // linear growth in ell once eta has washed out
    double v1 = list_size_requirement(2.0, 1.0, 10.0, 1.0, 1e8, 64);
    double v2 = list_size_requirement(2.0, 1.0, 10.0, 1.0, 2e8, 64);
    CHECK(v2 / v1 == doctest::Approx(2.0).epsilon(1e-3));
    // boundary: ell just above 7 log Delta stays finite and positive
    double ell0 = 7.0 * std::log(64.0) * 1.01;
    CHECK(list_size_requirement(2.0, 1.0, 10.0, 1.0, ell0, 64) > 0);
    CHECK_THROWS_AS(list_size_requirement(2.0, 1.0, 10.0, 1.0, 7.0 * std::log(64.0), 64),
                    regime_error);
    CHECK_THROWS_AS(list_size_requirement(2.0, 1.0, 10.0, 1.0, 100.0, 32), regime_error);
}

TEST_SUITE_END();
