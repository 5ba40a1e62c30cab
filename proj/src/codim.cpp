#include "proglab/codim.hpp"

#include <cmath>
#include <stdexcept>

#include "proglab/entropy.hpp"
#include "proglab/errors.hpp"

namespace proglab {

BigInt count_monomials(const DegreeCountQuery& q) {
    const std::size_t n = q.degrees_per_var.size();
    std::vector<Rational> weights = q.weights;
    if (weights.empty()) weights.assign(n, Rational(1));
    if (weights.size() != n) {
        throw std::invalid_argument("count_monomials: weights/degrees size mismatch");
    }
    for (const auto& w : weights) {
        if (w <= 0) throw std::invalid_argument("count_monomials: weights must be positive");
    }
    for (auto d : q.degrees_per_var) {
        if (d == 0) throw std::invalid_argument("count_monomials: degree range must be >= 1");
    }

    if (q.cap < 0) return 0;

    // Everything qualifies once the cap reaches the maximal degree.
    Rational deg_max = 0;
    for (std::size_t i = 0; i < n; ++i) deg_max += weights[i] * (q.degrees_per_var[i] - 1);
    if (q.cap >= deg_max) {
        BigInt all = 1;
        for (auto d : q.degrees_per_var) all *= d;
        return all;
    }

    // Clear the weight denominators so the DP indexes integers; the cap only
    // truncates, so flooring it in scaled units is exact.
    BigInt scale = 1;
    for (const auto& w : weights) {
        const BigInt den = boost::multiprecision::denominator(w);
        scale = boost::multiprecision::lcm(scale, den);
    }
    const Rational cap_scaled_rat = q.cap * scale;
    const BigInt cap_scaled_big = boost::multiprecision::numerator(cap_scaled_rat) /
                                  boost::multiprecision::denominator(cap_scaled_rat);
    constexpr std::int64_t kMaxTable = 2'000'000;
    if (cap_scaled_big > kMaxTable) {
        throw TooLarge("count_monomials: scaled degree cap exceeds the DP table limit");
    }
    const std::int64_t cap_scaled = cap_scaled_big.convert_to<std::int64_t>();

    std::vector<BigInt> table(static_cast<std::size_t>(cap_scaled) + 1, BigInt(0));
    table[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const BigInt w_big = boost::multiprecision::numerator(Rational(weights[i] * scale));
        if (w_big > kMaxTable) continue;  // only lambda = 0 fits under the cap
        const std::int64_t w = w_big.convert_to<std::int64_t>();
        std::vector<BigInt> next(table.size(), BigInt(0));
        for (std::int64_t d = 0; d <= cap_scaled; ++d) {
            BigInt acc = 0;
            for (std::uint32_t lambda = 0; lambda < q.degrees_per_var[i]; ++lambda) {
                const std::int64_t used = static_cast<std::int64_t>(lambda) * w;
                if (used > d) break;
                acc += table[static_cast<std::size_t>(d - used)];
            }
            next[static_cast<std::size_t>(d)] = std::move(acc);
        }
        table = std::move(next);
    }

    BigInt total = 0;
    for (const auto& v : table) total += v;
    return total;
}

BigInt count_monomials_uniform(int n, int k, double theta) {
    if (n < 0 || k < 1) throw std::invalid_argument("count_monomials_uniform: bad dimensions");
    DegreeCountQuery q;
    q.degrees_per_var.assign(static_cast<std::size_t>(n), static_cast<std::uint32_t>(k));
    q.cap = rational_from_double(theta) * Rational(static_cast<long>(n) * (k - 1));
    return count_monomials(q);
}

ChernoffCodimBound chernoff_codim_bound(int n, int k, double theta) {
    if (theta < 0 || theta > 1) {
        throw std::invalid_argument("chernoff_codim_bound: theta must lie in [0,1]");
    }
    const double log2_value = n * entropy_h(k, theta);
    return {std::exp2(log2_value), log2_value};
}

}  // namespace proglab
