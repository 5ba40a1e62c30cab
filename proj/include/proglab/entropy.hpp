#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace proglab {

struct MinimizeResult {
    double argmin = 0.0;
    double value = 0.0;
    int iterations = 0;
};

// Golden-section search. The objective must be strictly unimodal on [lo, hi];
// the bracket is shrunk until its width is at most tol.
MinimizeResult minimize_1d(const std::function<double(double)>& objective, double lo, double hi,
                           double tol);

// Generating-function majorant for the number of monomials of low weighted
// degree: x^{-theta*deg_max} * prod_i (1 + x^{w_i} + ... + x^{(m_i-1) w_i}),
// evaluated in log space. Requires x > 0.
double phi(double theta, double x, const std::vector<double>& weights,
           const std::vector<std::uint32_t>& moduli);

struct EntropyPoint {
    double value = 0.0;     // log2 of the attained minimum
    double argmin_x = 0.0;  // minimizing x (0 or +inf at the endpoints)
};

// H_k(theta) = log2 min_{x>0} x^{-theta(k-1)} (1 + x + ... + x^{k-1}).
// H_k(0) = H_k(1) = 0 by continuity. Requires k >= 2 and theta in [0, 1].
EntropyPoint entropy_h_detail(int k, double theta);
double entropy_h(int k, double theta);

// kappa_k = 2^{H_k(1/3)} = min_{x>0} x^{(1-k)/3} (1 + x + ... + x^{k-1}).
EntropyPoint kappa_detail(int k);
double kappa(int k);

// Solves H_k(theta) = value for theta on [branch_lo, branch_hi], where H_k is
// strictly monotone. Throws NoSolution if the value is not attained there.
double entropy_inverse(int k, double value, double branch_lo, double branch_hi);

}  // namespace proglab
