#include "proglab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "proglab/errors.hpp"

namespace proglab {

namespace {

constexpr double kLog2E = 1.4426950408889634074;

// log2(sum_{j=0}^{count-1} e^{j*t}), stable for large |t|.
double log2_geometric_sum_exp(double t, int count) {
    const double peak = t > 0 ? t * (count - 1) : 0.0;
    double sum = 0.0;
    for (int j = 0; j < count; ++j) sum += std::exp(j * t - peak);
    return (peak + std::log(sum)) * kLog2E;
}

}  // namespace

MinimizeResult minimize_1d(const std::function<double(double)>& objective, double lo, double hi,
                           double tol) {
    if (!(lo < hi)) throw std::invalid_argument("minimize_1d: empty bracket");
    if (!(tol > 0)) throw std::invalid_argument("minimize_1d: tolerance must be positive");

    constexpr double kInvPhi = 0.6180339887498948482;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    int iterations = 0;
    while (b - a > tol && iterations < 1000) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = objective(d);
        }
        ++iterations;
    }
    const double argmin = 0.5 * (a + b);
    return {argmin, objective(argmin), iterations};
}

double phi(double theta, double x, const std::vector<double>& weights,
           const std::vector<std::uint32_t>& moduli) {
    if (!(x > 0)) throw std::invalid_argument("phi: x must be positive");
    if (theta < 0 || theta > 1) throw std::invalid_argument("phi: theta must lie in [0,1]");
    if (weights.size() != moduli.size()) throw std::invalid_argument("phi: weights/moduli size mismatch");

    const double t = std::log(x);
    double deg_max = 0.0;
    double log2_product = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0)) throw std::invalid_argument("phi: weights must be positive");
        deg_max += weights[i] * (moduli[i] - 1);
        log2_product += log2_geometric_sum_exp(t * weights[i], static_cast<int>(moduli[i]));
    }
    return std::exp2(-theta * deg_max * t * kLog2E + log2_product);
}

EntropyPoint entropy_h_detail(int k, double theta) {
    if (k < 2) throw std::invalid_argument("entropy_h: k must be >= 2");
    if (theta < 0 || theta > 1) throw std::invalid_argument("entropy_h: theta must lie in [0,1]");
    // The infimum at the endpoints is attained only in the limit x -> 0 or
    // x -> infinity, both with value 0.
    if (theta == 0.0) return {0.0, 0.0};
    if (theta == 1.0) return {0.0, std::numeric_limits<double>::infinity()};

    // Substituting x = e^t makes the objective convex in t.
    const auto objective = [k, theta](double t) {
        return -theta * (k - 1) * t * kLog2E + log2_geometric_sum_exp(t, k);
    };
    const MinimizeResult res = minimize_1d(objective, -40.0, 40.0, 1e-12);
    return {res.value, std::exp(res.argmin)};
}

double entropy_h(int k, double theta) { return entropy_h_detail(k, theta).value; }

EntropyPoint kappa_detail(int k) {
    EntropyPoint h = entropy_h_detail(k, 1.0 / 3.0);
    return {std::exp2(h.value), h.argmin_x};
}

double kappa(int k) { return kappa_detail(k).value; }

double entropy_inverse(int k, double value, double branch_lo, double branch_hi) {
    if (!(branch_lo < branch_hi)) throw std::invalid_argument("entropy_inverse: empty branch");
    double f_lo = entropy_h(k, branch_lo);
    double f_hi = entropy_h(k, branch_hi);
    const bool increasing = f_lo < f_hi;
    const double f_min = std::min(f_lo, f_hi);
    const double f_max = std::max(f_lo, f_hi);
    constexpr double kRangeSlack = 1e-12;
    if (value < f_min - kRangeSlack || value > f_max + kRangeSlack) {
        throw NoSolution("entropy_inverse: value " + std::to_string(value) +
                         " not attained on branch");
    }
    value = std::clamp(value, f_min, f_max);

    double lo = branch_lo, hi = branch_hi;
    for (int i = 0; i < 100 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        const bool below = entropy_h(k, mid) < value;
        if (below == increasing) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace proglab
