#include <doctest.h>

#include <cstdint>
#include <vector>

#include "proglab/codim.hpp"
#include "proglab/entropy.hpp"
#include "proglab/group_ring.hpp"

using namespace proglab;

namespace {

// Brute-force oracle: walk every exponent vector and test the degree cap.
BigInt enumerate_count(const std::vector<std::uint32_t>& degrees,
                       const std::vector<Rational>& weights, const Rational& cap) {
    std::vector<std::uint32_t> lambda(degrees.size(), 0);
    BigInt count = 0;
    while (true) {
        Rational degree = 0;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            degree += (weights.empty() ? Rational(1) : weights[i]) * lambda[i];
        }
        if (degree <= cap) ++count;
        std::size_t pos = lambda.size();
        while (pos > 0 && ++lambda[pos - 1] == degrees[pos - 1]) lambda[--pos] = 0;
        if (pos == 0) break;
    }
    return count;
}

}  // namespace

TEST_CASE("counting basics") {
    CHECK(count_monomials({{2, 2}, {}, Rational(1)}) == 3);
    CHECK(count_monomials({{4, 4, 4}, {}, Rational(3)}) == 20);
    CHECK(count_monomials({{4, 4, 4}, {}, Rational(3)}) ==
          enumerate_count({4, 4, 4}, {}, Rational(3)));
    CHECK(count_monomials({{5, 5}, {}, Rational(8)}) == 25);  // cap = deg_max
    CHECK(count_monomials({{4, 4}, {}, Rational(-1)}) == 0);
    CHECK(count_monomials({{4, 4}, {}, Rational(0)}) == 1);
    CHECK(count_monomials({{}, {}, Rational(0)}) == 1);  // the empty monomial
}

TEST_CASE("rational weights match enumeration") {
    const std::vector<std::uint32_t> degrees{4, 3, 2};
    const std::vector<Rational> weights{Rational(1, 3), Rational(1, 2), Rational(2)};
    for (int numer = 0; numer <= 14; ++numer) {
        const Rational cap(numer, 3);
        CHECK(count_monomials({degrees, weights, cap}) == enumerate_count(degrees, weights, cap));
    }
}

TEST_CASE("complement symmetry and monotonicity") {
    const std::vector<std::uint32_t> degrees{4, 4, 4, 4};
    BigInt all = 1;
    for (auto d : degrees) all *= d;
    BigInt prev = -1;
    for (int cap = 0; cap <= 12; ++cap) {
        const BigInt below = count_monomials({degrees, {}, Rational(cap)});
        // Strictly-above count via the complementary cap.
        const BigInt above = all - below;
        CHECK(below + above == all);
        CHECK(below >= prev);
        prev = below;
    }
    CHECK(prev == all);
}

TEST_CASE("uniform weight scaling leaves the count unchanged") {
    const std::vector<std::uint32_t> degrees{4, 4, 4};
    for (int cap = 0; cap <= 9; ++cap) {
        const BigInt base = count_monomials({degrees, {}, Rational(cap)});
        for (const Rational scale : {Rational(3), Rational(5, 7)}) {
            const std::vector<Rational> weights(3, scale);
            CHECK(count_monomials({degrees, weights, scale * cap}) == base);
        }
    }
}

TEST_CASE("entropy bound dominates exact counts") {
    for (int k : {2, 4, 8}) {
        for (int n : {1, 5, 10, 20, 40}) {
            for (double theta = 0.05; theta <= 0.51; theta += 0.05) {
                const BigInt exact = count_monomials_uniform(n, k, theta);
                const ChernoffCodimBound bound = chernoff_codim_bound(n, k, theta);
                CHECK(log2_big(exact) <= bound.log2_value + 1e-9);
            }
        }
    }
}

TEST_CASE("DP count agrees with subspace enumeration") {
    for (const char* text : {"4", "8", "4x8", "8^2", "2x4x8"}) {
        const proglab::GroupSpec spec = proglab::GroupSpec::parse(text);
        Rational deg_max = 0;
        for (auto m : spec.moduli()) deg_max += m - 1;
        for (double theta = 0.0; theta <= 1.0 + 1e-12; theta += 0.125) {
            const auto subspace = proglab::subspace_X(spec, theta);
            DegreeCountQuery q;
            q.degrees_per_var = spec.moduli();
            q.cap = rational_from_double(theta) * deg_max;
            CHECK(subspace.codim() == count_monomials(q));
        }
    }
}

TEST_CASE("bound closed cases") {
    CHECK(chernoff_codim_bound(2, 2, 0.5).value == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(count_monomials_uniform(2, 2, 0.5) == 3);
    CHECK(chernoff_codim_bound(1, 4, 0.5).value == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(count_monomials_uniform(1, 4, 0.5) == 2);
    CHECK(chernoff_codim_bound(50, 4, 1.0 / 3.0).log2_value ==
          doctest::Approx(50.0 * entropy_h(4, 1.0 / 3.0)).epsilon(1e-12));
    CHECK(chernoff_codim_bound(50, 4, 1.0 / 3.0).log2_value ==
          doctest::Approx(92.61429970376191).epsilon(1e-8));
}
