#include <doctest.h>

#include <cmath>

#include "proglab/bound_solver.hpp"
#include "proglab/entropy.hpp"

using namespace proglab;

TEST_CASE("x0 maximizes the split entropy sum") {
    const X0Result res = solve_x0();
    CHECK(res.x0 > 0.25);
    CHECK(res.x0 < 0.5);
    CHECK(res.max_value == doctest::Approx(entropy_h(4, 1.0 / 3.0)).epsilon(1e-8));
    CHECK(res.max_value == doctest::Approx(std::log2(kappa(4))).epsilon(1e-8));

    // Independent grid scan at 1e-4 resolution.
    double best_x = 0.25, best = -1.0;
    for (double x = 0.25; x <= 0.5; x += 1e-4) {
        const double v = entropy_h(2, x) + entropy_h(2, 1.0 - 2.0 * x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    CHECK(res.x0 == doctest::Approx(best_x).epsilon(2e-4));
    CHECK(res.max_value >= best - 1e-9);
}

TEST_CASE("the split-entropy exponent and its aliases") {
    const double gamma = clp_gamma();
    CHECK(gamma == doctest::Approx(0.926).epsilon(1e-3));
    CHECK(std::pow(4.0, gamma) == doctest::Approx(3.61).epsilon(2e-3));
    CHECK(std::pow(4.0, -(1.0 - gamma)) == doctest::Approx(0.903).epsilon(1e-3));
    CHECK(2.0 * gamma == doctest::Approx(solve_x0().max_value).epsilon(1e-9));
}

TEST_CASE("coupled system solution") {
    const SolverReport report = solve_c8_system(1e-12);
    CHECK(report.theta1 == doctest::Approx(0.3427187634672914).epsilon(1e-9));
    CHECK(report.rho1 == doctest::Approx(0.3193802107414385).epsilon(1e-9));
    CHECK(report.bound_c8 == doctest::Approx(7.089906894602282).epsilon(1e-9));
    CHECK(report.bound_c8 < 7.09);
    CHECK(report.theta1 == doctest::Approx(0.343).epsilon(2e-3));
    CHECK(report.rho1 == doctest::Approx(0.32).epsilon(5e-3));
    REQUIRE(report.residuals.size() == 2);
    CHECK(report.residuals[0] <= 1e-9);
    CHECK(report.residuals[1] <= 1e-9);
    // The reflective extension past 1/2 does cross again; the solver only
    // reports it.
    CHECK(report.second_root_in_extension);
}

TEST_CASE("branch monotonicity across the bracket") {
    const double x0 = solve_x0().x0;
    double prev_product = 1.0, prev_coset = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double theta = x0 + 1e-6 + (0.5 - x0 - 2e-6) * i / 99.0;
        const double rho_product = rho_from_product_bound(theta);
        const double rho_coset = rho_from_coset_count(theta);
        if (i > 0) {
            CHECK(rho_product < prev_product);
            CHECK(rho_coset > prev_coset);
        }
        prev_product = rho_product;
        prev_coset = rho_coset;
    }
}

TEST_CASE("headline constants") {
    const SolverReport report = headline_constants();
    CHECK(report.constants.two_kappa4 == doctest::Approx(7.222).epsilon(1e-3));
    CHECK(report.constants.bound_c8_rk == doctest::Approx(0.8862).epsilon(1e-3));
    CHECK(report.constants.bound_c4_rk == doctest::Approx(0.9028).epsilon(1e-3));
    CHECK(report.kappa4 == doctest::Approx(3.6107186132760393).epsilon(1e-9));
    // Literal ordering of the improved bound between the two baselines.
    CHECK(report.bound_c8 < report.constants.two_kappa4);
    CHECK(report.bound_c8 > 2.0 * report.kappa4 * 0.98);
}

TEST_CASE("consistency chain") {
    const double max_value = solve_x0().max_value;
    CHECK(2.0 * clp_gamma() == doctest::Approx(max_value).epsilon(1e-8));
    CHECK(max_value == doctest::Approx(std::log2(kappa(4))).epsilon(1e-8));
    CHECK(max_value == doctest::Approx(entropy_h(4, 1.0 / 3.0)).epsilon(1e-8));
}

TEST_CASE("optimal point is feasible and locally maximal") {
    const BoundSystem best = optimal_system();
    CHECK(system_feasible(best, 1e-8));
    CHECK(best.log2_gamma_coset == doctest::Approx(1.0));
    CHECK(best.bound == doctest::Approx(7.089906894602282).epsilon(1e-8));

    const SolverReport report = solve_c8_system(1e-12);
    const double optimum = 1.0 + entropy_h(4, report.rho1);
    const double x0 = solve_x0().x0;
    for (int i = 0; i <= 80; ++i) {
        const double theta =
            std::max(x0 + 1e-9, report.theta1 - 0.02) +
            (std::min(0.5 - 1e-9, report.theta1 + 0.02) - std::max(x0 + 1e-9, report.theta1 - 0.02)) *
                i / 80.0;
        const BoundSystem probe = system_at_theta(theta);
        CHECK(system_feasible(probe, 1e-8));
        const double objective = probe.log2_gamma_coset + probe.log2_alpha + probe.log2_beta;
        CHECK(objective <= optimum + 1e-6);
    }
}
