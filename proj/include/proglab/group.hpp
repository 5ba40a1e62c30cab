#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "proglab/numeric.hpp"

namespace proglab {

// A finite abelian group given as a direct product of cyclic factors.
// Written additively: the factor of modulus m is Z/mZ.
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<std::uint32_t> moduli);

    // "8^2" = C8 x C8, "4x8" = C4 x C8, "2x4^3" = C2 x C4 x C4 x C4.
    static GroupSpec parse(std::string_view text);
    std::string str() const;

    std::size_t dim() const { return moduli_.size(); }
    const std::vector<std::uint32_t>& moduli() const { return moduli_; }
    std::uint32_t modulus(std::size_t i) const { return moduli_[i]; }
    BigInt order() const;
    bool is_two_group() const;

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<std::uint32_t> moduli_;
};

// Residue vector, always kept reduced; equality is structural.
struct GroupElement {
    std::vector<std::uint32_t> residues;

    GroupElement() = default;
    GroupElement(std::initializer_list<std::uint32_t> r) : residues(r) {}
    explicit GroupElement(std::vector<std::uint32_t> r) : residues(std::move(r)) {}

    auto operator<=>(const GroupElement&) const = default;
};

// Throws InvalidElement if g has the wrong dimension or an unreduced residue.
void check_element(const GroupSpec& spec, const GroupElement& g);

GroupElement identity(const GroupSpec& spec);
GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& spec, const GroupElement& g);

// Componentwise doubling: the image of g under the squaring endomorphism.
GroupElement square(const GroupSpec& spec, const GroupElement& g);

// Key of the equivalence class at the given level: level 1 keys by 2g,
// level 2 by 4g. Two elements share a key iff they agree at that power.
GroupElement class_key(const GroupSpec& spec, const GroupElement& g, int level);

// True iff a, b, c are mutually distinct and a + c = 2b.
bool is_progression(const GroupSpec& spec, const GroupElement& a, const GroupElement& b,
                    const GroupElement& c);

// Mixed-radix enumeration. Requires order(G) <= 2^63.
bool index_fits(const GroupSpec& spec);
std::uint64_t element_index(const GroupSpec& spec, const GroupElement& g);
GroupElement element_at(const GroupSpec& spec, std::uint64_t index);

}  // namespace proglab
