#include <doctest.h>

#include <random>
#include <vector>

#include "proglab/errors.hpp"
#include "proglab/group_ring.hpp"

#include "support/gf2.hpp"

using namespace proglab;

namespace {

RingElement random_element(const GroupSpec& spec, RingBasis basis, std::mt19937_64& rng) {
    const auto order = spec.order().convert_to<std::uint64_t>();
    RingElement e(spec, basis);
    for (std::uint64_t i = 0; i < order; ++i) {
        if (rng() & 1u) e.toggle(element_at(spec, i).residues);
    }
    return e;
}

}  // namespace

TEST_CASE("monomial multiplication in a truncated ring") {
    const GroupSpec c4 = GroupSpec::parse("4");
    const RingElement t = RingElement::monomial(c4, {1});
    CHECK(ring_mul(c4, t, t) == RingElement::monomial(c4, {2}));

    const RingElement t3 = RingElement::monomial(c4, {3});
    CHECK(ring_mul(c4, t3, t).is_zero());

    // (1 + t)^2 = 1 + t^2 in characteristic 2.
    RingElement one_plus_t = RingElement::one(c4, RingBasis::monomial);
    one_plus_t.toggle({1});
    RingElement expected = RingElement::one(c4, RingBasis::monomial);
    expected.toggle({2});
    CHECK(ring_mul(c4, one_plus_t, one_plus_t) == expected);

    const RingElement g = RingElement::from_group_element(c4, GroupElement{1});
    CHECK_THROWS_AS(ring_mul(c4, g, t), std::invalid_argument);
}

TEST_CASE("basis conversion") {
    const GroupSpec c4 = GroupSpec::parse("4");
    // generator g = 1 + t
    const RingElement g = RingElement::from_group_element(c4, GroupElement{1});
    RingElement expected = RingElement::one(c4, RingBasis::monomial);
    expected.toggle({1});
    CHECK(change_basis(c4, g) == expected);

    // g^2 = (1 + t)^2 = 1 + t^2
    const RingElement g2 = RingElement::from_group_element(c4, GroupElement{2});
    RingElement expected2 = RingElement::one(c4, RingBasis::monomial);
    expected2.toggle({2});
    CHECK(change_basis(c4, g2) == expected2);

    const RingElement id = RingElement::from_group_element(c4, identity(c4));
    CHECK(change_basis(c4, id) == RingElement::one(c4, RingBasis::monomial));
}

TEST_CASE("ring laws on random elements") {
    std::mt19937_64 rng(2024);
    for (const char* text : {"4", "8", "16", "4x4", "2x8", "4x8", "2x2x4", "4x4x4", "6", "3x5"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        for (RingBasis basis : {RingBasis::group, RingBasis::monomial}) {
            for (int trial = 0; trial < 200; ++trial) {
                const RingElement a = random_element(spec, basis, rng);
                const RingElement b = random_element(spec, basis, rng);
                const RingElement c = random_element(spec, basis, rng);
                CHECK(ring_add(a, a).is_zero());
                CHECK(ring_mul(spec, a, b) == ring_mul(spec, b, a));
                CHECK(ring_mul(spec, ring_mul(spec, a, b), c) ==
                      ring_mul(spec, a, ring_mul(spec, b, c)));
            }
        }
    }
}

TEST_CASE("basis conversion is involutive and multiplicative") {
    std::mt19937_64 rng(77);
    for (const char* text : {"4", "8", "4x4", "2x8", "4x8", "2x2x4"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        for (int trial = 0; trial < 200; ++trial) {
            const RingElement a = random_element(spec, RingBasis::group, rng);
            CHECK(change_basis(spec, change_basis(spec, a)) == a);
        }
        // For 2-power moduli the conversion is a ring isomorphism.
        for (int trial = 0; trial < 100; ++trial) {
            const RingElement a = random_element(spec, RingBasis::group, rng);
            const RingElement b = random_element(spec, RingBasis::group, rng);
            CHECK(change_basis(spec, ring_mul(spec, a, b)) ==
                  ring_mul(spec, change_basis(spec, a), change_basis(spec, b)));
        }
    }
}

TEST_CASE("multiplication in groups too large to index") {
    // Order 512^8 = 2^72 exceeds the packed-index range; sparse vectors only.
    const GroupSpec big = GroupSpec::parse("512^8");
    const std::vector<std::uint32_t> e1{1, 0, 0, 0, 0, 0, 0, 0};
    const std::vector<std::uint32_t> e2{2, 0, 0, 0, 0, 0, 0, 0};
    const std::vector<std::uint32_t> top{511, 0, 0, 0, 0, 0, 0, 0};

    const RingElement t = RingElement::monomial(big, e1);
    CHECK(ring_mul(big, t, t) == RingElement::monomial(big, e2));
    CHECK(ring_mul(big, RingElement::monomial(big, top), t).is_zero());

    RingElement g_top(big, RingBasis::group);
    g_top.toggle(top);
    RingElement g_one(big, RingBasis::group);
    g_one.toggle(e1);
    RingElement wrapped = ring_mul(big, g_top, g_one);  // residues wrap around
    CHECK(wrapped.support().count(std::vector<std::uint32_t>(8, 0)) == 1);
}

TEST_CASE("subspace membership and codimension") {
    const GroupSpec c4 = GroupSpec::parse("4");
    const SubspaceSpec half = subspace_X(c4, 0.5);
    CHECK(half.deg_max() == doctest::Approx(3.0));
    CHECK(half.members() == std::vector<std::vector<std::uint32_t>>{{2}, {3}});
    CHECK(half.codim() == 2);

    const SubspaceSpec zero = subspace_X(c4, 0.0);
    CHECK(zero.members() == std::vector<std::vector<std::uint32_t>>{{1}, {2}, {3}});
    CHECK(zero.codim() == 1);

    const SubspaceSpec full = subspace_X(c4, 1.0);
    CHECK(full.members().empty());
    CHECK(full.codim() == 4);

    CHECK_THROWS_AS(subspace_X(c4, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(subspace_X(c4, 1.1), std::invalid_argument);
}

TEST_CASE("zero products at and above the threshold") {
    const GroupSpec c4sq = GroupSpec::parse("4^2");
    const double third = 1.0 / 3.0;
    const std::vector<SubspaceSpec> triple{subspace_X(c4sq, third), subspace_X(c4sq, third),
                                           subspace_X(c4sq, third)};
    const ZeroProductReport r1 = verify_zero_product(c4sq, triple, 100, 42);
    CHECK(r1.all_zero);
    CHECK_FALSE(r1.counterexample.has_value());

    const GroupSpec c4 = GroupSpec::parse("4");
    const std::vector<SubspaceSpec> pair{subspace_X(c4, 0.5), subspace_X(c4, 0.5)};
    CHECK(verify_zero_product(c4, pair, 50, 7).all_zero);

    const std::vector<SubspaceSpec> single{subspace_X(c4, 1.0)};
    CHECK(verify_zero_product(c4, single, 10, 1).all_zero);

    CHECK_THROWS_AS(verify_zero_product(c4, {}, 10, 1), std::invalid_argument);
}

TEST_CASE("zero-product law on a threshold grid") {
    std::mt19937_64 rng(5);
    for (const char* text : {"4", "4^2", "4^3", "8", "8^2", "8^3"}) {
        const GroupSpec spec = GroupSpec::parse(text);
        const std::vector<std::vector<double>> tuples{
            {1.0},
            {0.5, 0.5},
            {0.6, 0.4},
            {0.75, 0.3},
            {1.0 / 3, 1.0 / 3, 1.0 / 3},
            {0.5, 0.25, 0.25},
            {0.2, 0.4, 0.45},
        };
        for (const auto& thetas : tuples) {
            std::vector<SubspaceSpec> subspaces;
            for (double theta : thetas) subspaces.push_back(subspace_X(spec, theta));
            const auto report = verify_zero_product(spec, subspaces, 100, rng());
            CHECK(report.all_zero);
        }
    }
}

TEST_CASE("threshold sharpness below the critical sum") {
    // In 4^2 the maximal degree is 6; theta sums at most 1 - 2/6 leave room
    // for a nonzero product, and sampling finds one quickly.
    const GroupSpec c4sq = GroupSpec::parse("4^2");
    const std::vector<SubspaceSpec> pair{subspace_X(c4sq, 1.0 / 3), subspace_X(c4sq, 1.0 / 3)};
    const ZeroProductReport report = verify_zero_product(c4sq, pair, 200, 11);
    CHECK_FALSE(report.all_zero);
    REQUIRE(report.counterexample.has_value());
    CHECK_FALSE(report.counterexample->product.is_zero());
}

TEST_CASE("orthogonal subspace pair codimensions cover the support") {
    // For a diagonal bilinear form <f,g> = sum a(x) f(x) g(x) over GF(2), a
    // subspace and its annihilator have codimensions summing to at least the
    // support size of a.
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 7);  // |Omega| up to 10
        const std::uint16_t a_mask = static_cast<std::uint16_t>(rng() & ((1u << n) - 1));

        // Random X, then Y = annihilator of X under the form.
        gf2::Basis x_basis;
        const int generators = 1 + static_cast<int>(rng() % n);
        for (int i = 0; i < generators; ++i) {
            x_basis.insert(static_cast<std::uint16_t>(rng() & ((1u << n) - 1)));
        }
        const gf2::Basis y_basis = gf2::annihilator(x_basis, a_mask, n);

        const int codim_x = n - x_basis.dim();
        const int codim_y = n - y_basis.dim();
        CHECK(codim_x + codim_y >= __builtin_popcount(a_mask));
    }
}
