#include "proglab/group_ring.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "proglab/errors.hpp"

namespace proglab {

namespace {

void check_exponents(const GroupSpec& spec, const std::vector<std::uint32_t>& exponents) {
    if (exponents.size() != spec.dim()) {
        throw InvalidElement("exponent vector dimension mismatch");
    }
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        if (exponents[i] >= spec.modulus(i)) {
            throw InvalidElement("exponent out of range for modulus");
        }
    }
}

std::uint64_t pack(const GroupSpec& spec, const std::vector<std::uint32_t>& v) {
    std::uint64_t key = 0;
    for (std::size_t i = spec.dim(); i-- > 0;) key = key * spec.modulus(i) + v[i];
    return key;
}

std::vector<std::uint32_t> unpack(const GroupSpec& spec, std::uint64_t key) {
    std::vector<std::uint32_t> v(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        v[i] = static_cast<std::uint32_t>(key % spec.modulus(i));
        key /= spec.modulus(i);
    }
    return v;
}

// XOR-accumulate: keys appearing an odd number of times survive.
std::vector<std::uint64_t> reduce_mod2(std::vector<std::uint64_t>& keys) {
    std::sort(keys.begin(), keys.end());
    std::vector<std::uint64_t> survivors;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        if ((j - i) % 2 == 1) survivors.push_back(keys[i]);
        i = j;
    }
    return survivors;
}

}  // namespace

RingElement RingElement::zero(const GroupSpec& spec, RingBasis basis) {
    return RingElement(spec, basis);
}

RingElement RingElement::one(const GroupSpec& spec, RingBasis basis) {
    RingElement e(spec, basis);
    e.toggle(std::vector<std::uint32_t>(spec.dim(), 0));
    return e;
}

RingElement RingElement::monomial(const GroupSpec& spec, const std::vector<std::uint32_t>& exponents) {
    RingElement e(spec, RingBasis::monomial);
    e.toggle(exponents);
    return e;
}

RingElement RingElement::from_group_element(const GroupSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    RingElement e(spec, RingBasis::group);
    e.toggle(g.residues);
    return e;
}

bool RingElement::contains(const std::vector<std::uint32_t>& exponents) const {
    return support_.count(exponents) > 0;
}

void RingElement::toggle(const std::vector<std::uint32_t>& exponents) {
    check_exponents(spec_, exponents);
    const auto it = support_.find(exponents);
    if (it == support_.end()) {
        support_.insert(exponents);
    } else {
        support_.erase(it);
    }
}

bool RingElement::operator==(const RingElement& other) const {
    return spec_ == other.spec_ && basis_ == other.basis_ && support_ == other.support_;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    if (a.spec() != b.spec() || a.basis() != b.basis()) {
        throw std::invalid_argument("ring_add: operands live in different rings");
    }
    RingElement out = a;
    for (const auto& v : b.support()) out.toggle(v);
    return out;
}

RingElement ring_mul(const GroupSpec& spec, const RingElement& a, const RingElement& b) {
    if (a.spec() != spec || b.spec() != spec) {
        throw std::invalid_argument("ring_mul: operand bound to a different group");
    }
    if (a.basis() != b.basis()) {
        throw std::invalid_argument("ring_mul: operands in different bases");
    }
    const bool group_basis = a.basis() == RingBasis::group;
    RingElement out(spec, a.basis());
    if (a.is_zero() || b.is_zero()) return out;

    const std::size_t n = spec.dim();
    if (index_fits(spec)) {
        std::vector<std::uint64_t> keys;
        keys.reserve(a.support_size() * b.support_size());
        std::vector<std::uint32_t> sum(n);
        for (const auto& va : a.support()) {
            for (const auto& vb : b.support()) {
                bool alive = true;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint32_t s = va[i] + vb[i];
                    if (s >= spec.modulus(i)) {
                        if (!group_basis) {
                            alive = false;  // nilpotent generator vanishes
                            break;
                        }
                        s -= spec.modulus(i);
                    }
                    sum[i] = s;
                }
                if (alive) keys.push_back(pack(spec, sum));
            }
        }
        for (auto key : reduce_mod2(keys)) out.toggle(unpack(spec, key));
        return out;
    }

    for (const auto& va : a.support()) {
        for (const auto& vb : b.support()) {
            std::vector<std::uint32_t> sum(n);
            bool alive = true;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t s = va[i] + vb[i];
                if (s >= spec.modulus(i)) {
                    if (!group_basis) {
                        alive = false;
                        break;
                    }
                    s -= spec.modulus(i);
                }
                sum[i] = s;
            }
            if (alive) out.toggle(sum);
        }
    }
    return out;
}

RingElement change_basis(const GroupSpec& spec, const RingElement& a) {
    if (a.spec() != spec) {
        throw std::invalid_argument("change_basis: operand bound to a different group");
    }
    const RingBasis target = a.basis() == RingBasis::group ? RingBasis::monomial : RingBasis::group;
    RingElement out(spec, target);

    // Substituting 1 + (generator) expands each exponent vector r into the
    // vectors j with j_i a binary submask of r_i (Lucas: C(r,j) is odd iff
    // j AND r = j). The transform is its own inverse over GF(2).
    const std::size_t n = spec.dim();
    std::vector<std::vector<std::uint32_t>> submasks(n);
    std::vector<std::size_t> cursor(n);
    std::vector<std::uint32_t> term(n);
    for (const auto& r : a.support()) {
        for (std::size_t i = 0; i < n; ++i) {
            submasks[i].clear();
            std::uint32_t sub = r[i];
            while (true) {
                submasks[i].push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & r[i];
            }
            cursor[i] = 0;
        }
        while (true) {
            for (std::size_t i = 0; i < n; ++i) term[i] = submasks[i][cursor[i]];
            out.toggle(term);
            std::size_t pos = 0;
            while (pos < n && ++cursor[pos] == submasks[pos].size()) cursor[pos++] = 0;
            if (pos == n) break;
        }
    }
    return out;
}

SubspaceSpec::SubspaceSpec(GroupSpec spec, double theta, std::vector<double> weights)
    : spec_(std::move(spec)), weights_(std::move(weights)), theta_(theta) {
    if (theta_ < 0.0 || theta_ > 1.0) {
        throw std::invalid_argument("SubspaceSpec: theta must lie in [0,1]");
    }
    if (weights_.empty()) weights_.assign(spec_.dim(), 1.0);
    if (weights_.size() != spec_.dim()) {
        throw std::invalid_argument("SubspaceSpec: one weight per coordinate required");
    }
    for (double w : weights_) {
        if (!(w > 0)) throw std::invalid_argument("SubspaceSpec: weights must be positive");
        if (w != std::floor(w)) integer_weights_ = false;
    }
    deg_max_ = 0.0;
    for (std::size_t i = 0; i < spec_.dim(); ++i) {
        deg_max_ += weights_[i] * (spec_.modulus(i) - 1);
    }
    if (!(deg_max_ > 0)) {
        throw std::invalid_argument("SubspaceSpec: degenerate group, deg_max must be positive");
    }
    threshold_ = theta_ * deg_max_;
}

double SubspaceSpec::degree(const std::vector<std::uint32_t>& exponents) const {
    check_exponents(spec_, exponents);
    double d = 0.0;
    for (std::size_t i = 0; i < spec_.dim(); ++i) d += weights_[i] * exponents[i];
    return d;
}

bool SubspaceSpec::contains(const std::vector<std::uint32_t>& exponents) const {
    // Integer weights compare exactly; otherwise degrees within 1e-9 of the
    // threshold count as equal, hence not strictly above.
    const double d = degree(exponents);
    return integer_weights_ ? d > threshold_ : d > threshold_ + 1e-9;
}

std::vector<std::vector<std::uint32_t>> SubspaceSpec::members() const {
    if (spec_.order() > 4'000'000) {
        throw TooLarge("SubspaceSpec::members: group too large to enumerate");
    }
    const std::uint64_t order = spec_.order().convert_to<std::uint64_t>();
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t idx = 0; idx < order; ++idx) {
        auto v = element_at(spec_, idx).residues;
        if (contains(v)) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt SubspaceSpec::codim() const {
    if (spec_.order() > 4'000'000) {
        throw TooLarge("SubspaceSpec::codim: group too large to enumerate");
    }
    const std::uint64_t order = spec_.order().convert_to<std::uint64_t>();
    std::uint64_t below = 0;
    for (std::uint64_t idx = 0; idx < order; ++idx) {
        if (!contains(element_at(spec_, idx).residues)) ++below;
    }
    return BigInt(below);
}

SubspaceSpec subspace_X(const GroupSpec& spec, double theta, std::vector<double> weights) {
    return SubspaceSpec(spec, theta, std::move(weights));
}

ZeroProductReport verify_zero_product(const GroupSpec& spec,
                                      const std::vector<SubspaceSpec>& subspaces, int samples,
                                      std::uint64_t seed) {
    if (subspaces.empty()) {
        throw std::invalid_argument("verify_zero_product: need at least one subspace");
    }
    if (samples < 1) throw std::invalid_argument("verify_zero_product: need at least one sample");
    for (const auto& s : subspaces) {
        if (s.spec() != spec) {
            throw std::invalid_argument("verify_zero_product: subspace bound to a different group");
        }
        if (s.weights() != subspaces.front().weights()) {
            throw std::invalid_argument("verify_zero_product: subspaces must share weights");
        }
    }

    std::vector<std::vector<std::vector<std::uint32_t>>> member_lists;
    member_lists.reserve(subspaces.size());
    for (const auto& s : subspaces) member_lists.push_back(s.members());

    std::mt19937_64 rng(seed);
    ZeroProductReport report;
    report.samples = samples;
    for (int sample = 0; sample < samples; ++sample) {
        std::vector<RingElement> factors;
        factors.reserve(subspaces.size());
        for (const auto& members : member_lists) {
            RingElement e(spec, RingBasis::monomial);
            for (const auto& m : members) {
                if (rng() & 1u) e.toggle(m);
            }
            factors.push_back(std::move(e));
        }
        RingElement product = factors.front();
        for (std::size_t i = 1; i < factors.size(); ++i) {
            product = ring_mul(spec, product, factors[i]);
        }
        if (!product.is_zero()) {
            report.all_zero = false;
            report.counterexample.emplace(sample, std::move(factors), std::move(product));
            break;
        }
    }
    return report;
}

}  // namespace proglab
