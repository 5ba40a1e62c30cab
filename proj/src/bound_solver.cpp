#include "proglab/bound_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "proglab/entropy.hpp"
#include "proglab/errors.hpp"

namespace proglab {

namespace {

// H2 extended by reflection to the whole real line; used only for the
// informational second-root scan past theta = 1/2.
double h2_reflected(double t) {
    t = std::fabs(t);
    t -= 2.0 * std::floor(t / 2.0);
    if (t > 1.0) t = 2.0 - t;
    return entropy_h(2, t);
}

double branch_gap(double theta) {
    return rho_from_product_bound(theta) - rho_from_coset_count(theta);
}

}  // namespace

X0Result solve_x0() {
    const auto negated = [](double x) { return -(entropy_h(2, x) + entropy_h(2, 1.0 - 2.0 * x)); };
    const MinimizeResult res = minimize_1d(negated, 0.25, 0.5, 1e-12);
    return {res.argmin, -res.value};
}

double clp_gamma() {
    const auto negated = [](double eps) {
        return -(entropy_h(2, 0.5 - eps) + entropy_h(2, 2.0 * eps));
    };
    const MinimizeResult res = minimize_1d(negated, 0.0, 0.25, 1e-12);
    return -res.value / 2.0;
}

double rho_from_product_bound(double theta) {
    const double target = entropy_h(2, theta) + entropy_h(2, 1.0 - 2.0 * theta);
    return entropy_inverse(4, target, 0.0, 0.5);
}

double rho_from_coset_count(double theta) {
    const double target = 1.0 + entropy_h(2, 1.0 - 2.0 * theta);
    return (1.0 - entropy_inverse(4, target, 0.0, 0.5)) / 2.0;
}

SolverReport solve_c8_system(double tol) {
    if (!(tol > 0)) throw std::invalid_argument("solve_c8_system: tolerance must be positive");

    SolverReport report;
    const X0Result x0 = solve_x0();
    report.x0 = x0.x0;

    double lo = x0.x0 + 1e-9;
    double hi = 0.5 - 1e-12;
    double gap_lo = branch_gap(lo);
    const double gap_hi = branch_gap(hi);
    if ((gap_lo < 0) == (gap_hi < 0)) {
        throw SolverFailure("solve_c8_system: no sign change on [x0, 1/2]");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double gap_mid = branch_gap(mid);
        if ((gap_mid < 0) == (gap_lo < 0)) {
            lo = mid;
            gap_lo = gap_mid;
        } else {
            hi = mid;
        }
    }

    report.theta1 = 0.5 * (lo + hi);
    report.rho1 = rho_from_product_bound(report.theta1);
    report.bound_c8 = 2.0 * std::exp2(entropy_h(4, report.rho1));
    const double h2_tail = entropy_h(2, 1.0 - 2.0 * report.theta1);
    report.residuals = {
        std::fabs(entropy_h(4, report.rho1) - entropy_h(2, report.theta1) - h2_tail),
        std::fabs(entropy_h(4, 1.0 - 2.0 * report.rho1) - 1.0 - h2_tail),
    };

    // Informational scan of the reflective extension on (1/2, 1].
    double prev = branch_gap(0.5 - 1e-12);
    for (double theta = 0.505; theta <= 1.0; theta += 0.005) {
        const double t1 = h2_reflected(theta) + h2_reflected(1.0 - 2.0 * theta);
        const double t2 = 1.0 + h2_reflected(1.0 - 2.0 * theta);
        if (t1 > 2.0 || t2 > 2.0) continue;
        const double gap = entropy_inverse(4, t1, 0.0, 0.5) -
                           (1.0 - entropy_inverse(4, t2, 0.0, 0.5)) / 2.0;
        if ((gap < 0) != (prev < 0)) report.second_root_in_extension = true;
        prev = gap;
    }
    return report;
}

SolverReport headline_constants() {
    SolverReport report = solve_c8_system(1e-12);
    report.gamma_clp = clp_gamma();
    report.kappa4 = kappa(4);
    report.constants.bound_c4_rk = report.kappa4 / 4.0;
    report.constants.bound_c8_rk = report.bound_c8 / 8.0;
    report.constants.two_kappa4 = 2.0 * report.kappa4;
    return report;
}

BoundSystem optimal_system() {
    const SolverReport report = solve_c8_system(1e-12);
    BoundSystem s;
    s.theta = report.theta1;
    s.rho = report.rho1;
    s.log2_alpha = entropy_h(2, s.theta);
    s.log2_beta = entropy_h(2, 1.0 - 2.0 * s.theta);
    s.log2_gamma_coset = 1.0;
    s.bound = std::exp2(s.log2_gamma_coset + s.log2_alpha + s.log2_beta);
    return s;
}

BoundSystem system_at_theta(double theta) {
    if (theta < 0.25 || theta > 0.5) {
        throw std::invalid_argument("system_at_theta: theta must lie in [1/4, 1/2]");
    }
    BoundSystem s;
    s.theta = theta;
    s.log2_beta = entropy_h(2, 1.0 - 2.0 * theta);
    s.log2_gamma_coset = 1.0;
    s.rho = rho_from_coset_count(theta);
    s.log2_alpha = std::min(entropy_h(2, theta), entropy_h(4, s.rho) - s.log2_beta);
    s.bound = std::exp2(s.log2_gamma_coset + s.log2_alpha + s.log2_beta);
    return s;
}

bool system_feasible(const BoundSystem& s, double tol) {
    if (s.theta < 0.25 - tol || s.theta > 0.5 + tol) return false;
    if (s.rho < 0.0 - tol || s.rho > 0.5 + tol) return false;
    if (std::fabs(s.log2_beta - entropy_h(2, 1.0 - 2.0 * s.theta)) > tol) return false;
    if (s.log2_alpha > entropy_h(2, s.theta) + tol) return false;
    if (std::fabs(s.log2_gamma_coset + s.log2_beta - entropy_h(4, 1.0 - 2.0 * s.rho)) > tol) {
        return false;
    }
    if (s.log2_alpha + s.log2_beta > entropy_h(4, s.rho) + tol) return false;
    return true;
}

}  // namespace proglab
