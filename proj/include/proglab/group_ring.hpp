#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "proglab/group.hpp"
#include "proglab/numeric.hpp"

namespace proglab {

// The group algebra over GF(2) has two working bases:
//  - group: the group elements themselves, exponents are residue vectors;
//  - monomial: products of the nilpotent generators t_i = 1 + g_i, exponents
//    componentwise below the moduli, with t_i^{m_i} = 0.
enum class RingBasis { group, monomial };

// Sparse GF(2) combination: the support set of basis exponent vectors whose
// coefficient is 1. Value type; all arithmetic is by free functions.
class RingElement {
public:
    RingElement(GroupSpec spec, RingBasis basis) : spec_(std::move(spec)), basis_(basis) {}

    static RingElement zero(const GroupSpec& spec, RingBasis basis);
    static RingElement one(const GroupSpec& spec, RingBasis basis);
    static RingElement monomial(const GroupSpec& spec, const std::vector<std::uint32_t>& exponents);
    static RingElement from_group_element(const GroupSpec& spec, const GroupElement& g);

    const GroupSpec& spec() const { return spec_; }
    RingBasis basis() const { return basis_; }
    bool is_zero() const { return support_.empty(); }
    std::size_t support_size() const { return support_.size(); }
    const std::set<std::vector<std::uint32_t>>& support() const { return support_; }
    bool contains(const std::vector<std::uint32_t>& exponents) const;

    // XOR one basis vector in or out; validates the exponent range.
    void toggle(const std::vector<std::uint32_t>& exponents);

    bool operator==(const RingElement& other) const;

private:
    GroupSpec spec_;
    RingBasis basis_;
    std::set<std::vector<std::uint32_t>> support_;
};

// Characteristic-2 addition: symmetric difference of supports.
RingElement ring_add(const RingElement& a, const RingElement& b);

// Product in the common basis of the operands. Monomial basis: truncated
// polynomial multiplication (overflowing exponents vanish). Group basis:
// convolution with residues reduced modulo the moduli.
RingElement ring_mul(const GroupSpec& spec, const RingElement& a, const RingElement& b);

// Substitutes t_i = 1 + g_i (equivalently g_i = 1 + t_i) and returns the same
// ring element expressed in the other basis. Involutive.
RingElement change_basis(const GroupSpec& spec, const RingElement& a);

// The span of all monomials of weighted degree strictly above theta*deg_max.
class SubspaceSpec {
public:
    SubspaceSpec() = default;
    SubspaceSpec(GroupSpec spec, double theta, std::vector<double> weights);

    const GroupSpec& spec() const { return spec_; }
    const std::vector<double>& weights() const { return weights_; }
    double theta() const { return theta_; }
    double deg_max() const { return deg_max_; }
    double threshold() const { return threshold_; }

    double degree(const std::vector<std::uint32_t>& exponents) const;
    bool contains(const std::vector<std::uint32_t>& exponents) const;

    // All member monomials, lexicographically. Requires order(G) <= 4e6.
    std::vector<std::vector<std::uint32_t>> members() const;

    // Number of monomials at or below the threshold.
    BigInt codim() const;

private:
    GroupSpec spec_;
    std::vector<double> weights_;
    double theta_ = 0.0;
    double deg_max_ = 0.0;
    double threshold_ = 0.0;
    bool integer_weights_ = true;
};

SubspaceSpec subspace_X(const GroupSpec& spec, double theta, std::vector<double> weights = {});

struct ZeroProductCounterexample {
    int sample_index = 0;
    std::vector<RingElement> factors;
    RingElement product;

    ZeroProductCounterexample(int index, std::vector<RingElement> f, RingElement p)
        : sample_index(index), factors(std::move(f)), product(std::move(p)) {}
};

struct ZeroProductReport {
    bool all_zero = true;
    std::optional<ZeroProductCounterexample> counterexample;
    int samples = 0;
};

// Draws `samples` random GF(2) combinations from each subspace (each member
// monomial included with probability 1/2), multiplies each tuple, and checks
// the products against zero. Deterministic for a fixed seed.
ZeroProductReport verify_zero_product(const GroupSpec& spec,
                                      const std::vector<SubspaceSpec>& subspaces, int samples,
                                      std::uint64_t seed);

}  // namespace proglab
