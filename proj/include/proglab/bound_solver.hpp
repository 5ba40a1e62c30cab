#pragma once

#include <vector>

namespace proglab {

// One feasible point of the coupled constraint system that controls the
// density exponents: per-subclass density alpha, subclasses-per-class count
// base beta, class count base gamma_coset, with the mixing parameters theta
// and rho. All densities are carried as log2 values.
struct BoundSystem {
    double theta = 0.0;
    double rho = 0.0;
    double log2_alpha = 0.0;
    double log2_beta = 0.0;
    double log2_gamma_coset = 0.0;
    double bound = 0.0;  // 2^{log2_gamma_coset + log2_alpha + log2_beta}
};

struct SolverConstants {
    double bound_c4_rk = 0.0;  // kappa_4 / 4
    double bound_c8_rk = 0.0;  // bound_c8 / 8
    double two_kappa4 = 0.0;   // 2 * kappa_4
};

struct SolverReport {
    double x0 = 0.0;
    double gamma_clp = 0.0;
    double kappa4 = 0.0;
    double theta1 = 0.0;
    double rho1 = 0.0;
    double bound_c8 = 0.0;
    std::vector<double> residuals;
    SolverConstants constants;
    // True if the reflective extension of the system beyond theta = 1/2 shows
    // another sign change; informational, never fatal.
    bool second_root_in_extension = false;
};

struct X0Result {
    double x0 = 0.0;
    double max_value = 0.0;
};

// Unique maximizer of H2(x) + H2(1-2x) on [1/4, 1/2]; the maximum equals
// H4(1/3) = log2 kappa_4.
X0Result solve_x0();

// (1/2) * max over eps in (0, 1/4) of H2(1/2 - eps) + H2(2 eps).
double clp_gamma();

// The two branches expressing rho as a function of theta:
//  - from the per-coset product constraint H4(rho) = H2(theta) + H2(1-2 theta)
//    (strictly decreasing on [x0, 1/2]);
//  - from the coset-count constraint H4(1-2 rho) = 1 + H2(1-2 theta)
//    (strictly increasing).
double rho_from_product_bound(double theta);
double rho_from_coset_count(double theta);

// Intersects the two branches on [x0, 1/2] by bisection. Throws SolverFailure
// if the bracket shows no sign change. bound_c8 = 2 * 2^{H4(rho1)}.
SolverReport solve_c8_system(double tol);

// solve_c8_system plus the derived headline constants.
SolverReport headline_constants();

// The optimal system point: gamma_coset = 2 and both density constraints tight.
BoundSystem optimal_system();

// The best feasible system at a given theta with gamma_coset = 2: beta comes
// from theta, rho from the coset-count constraint, and alpha is raised to the
// product bound. Used to probe that the optimum is a maximum.
BoundSystem system_at_theta(double theta);

// Checks the four constraint lines at a candidate point.
bool system_feasible(const BoundSystem& s, double tol);

}  // namespace proglab
