#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "proglab/group.hpp"
#include "proglab/numeric.hpp"

namespace proglab {

// A sphere of lattice points inside a box, designed so that the identity
// embedding into (Z/mZ)^n carries it to a progression-free set:
//  - modulus 8: coordinates in {0..4} around center 2 (squared offsets 0,1,4);
//  - modulus 4: coordinates in {0..2} around center 1 (squared offsets 0,1).
struct SphereSpec {
    int dim = 1;
    int modulus = 8;
    std::int64_t radius2 = 0;  // squared radius

    int value_count() const { return modulus == 8 ? 5 : 3; }
    int center() const { return modulus == 8 ? 2 : 1; }
};

// Exact number of lattice points on the sphere, by DP over coordinates.
BigInt sphere_count(const SphereSpec& spec);

// Default squared radius: 2n for modulus 8; for modulus 4 the radius with the
// largest sphere (ties to the smaller radius).
std::int64_t default_radius2(int n, int modulus);

// The sphere as elements of (Z/mZ)^n, lexicographically sorted. Enumeration
// is guarded: value_count^n must stay at or below 1e7.
std::vector<GroupElement> build_behrend_set(int n, int modulus,
                                            std::optional<std::int64_t> radius2 = std::nullopt);

struct GrowthRow {
    int n = 0;
    std::int64_t radius2 = 0;
    BigInt count;
    double ratio = 0.0;  // count * sqrt(n) / base^n, base 5 or 3
};

// Counts at the default radius for each dimension, with the normalized ratio
// column that should stabilize as n grows.
std::vector<GrowthRow> growth_report(const std::vector<int>& dims, int modulus);

}  // namespace proglab
