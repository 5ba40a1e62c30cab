#pragma once

#include <cstdint>
#include <vector>

#include "proglab/numeric.hpp"

namespace proglab {

// Counting query: exponent i ranges over [0, degrees_per_var[i]); a monomial
// qualifies when its weighted degree sum_i w_i * lambda_i is at most cap.
struct DegreeCountQuery {
    std::vector<std::uint32_t> degrees_per_var;
    std::vector<Rational> weights;  // empty means all ones
    Rational cap = 0;
};

// Exact count of qualifying monomials by dynamic programming over variables
// after clearing the weights to a common integer scale.
BigInt count_monomials(const DegreeCountQuery& q);

// Convenience: n variables of k values each, unit weights, cap = theta*(k-1)*n.
BigInt count_monomials_uniform(int n, int k, double theta);

struct ChernoffCodimBound {
    double value = 0.0;       // 2^{n * H_k(theta)}; +inf when it overflows
    double log2_value = 0.0;  // n * H_k(theta)
};

ChernoffCodimBound chernoff_codim_bound(int n, int k, double theta);

}  // namespace proglab
