#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "proglab/group.hpp"
#include "proglab/numeric.hpp"

namespace proglab {

struct SearchBudget {
    std::int64_t max_nodes = 20'000'000;
    double time_limit_s = 120.0;
    int restarts = 64;
    std::uint64_t seed = 1;
};

struct ApFreeReport {
    bool free = true;
    std::optional<std::array<GroupElement, 3>> witness;  // (a, b, c) with a + c = 2b
};

// Scans ordered pairs (a, b) of the set and looks up c = 2b - a. Guarded at
// |A|^2 <= 1e8 pair probes.
ApFreeReport verify_ap_free(const GroupSpec& spec, const std::vector<GroupElement>& a);

struct R3Result {
    int size = 0;
    std::vector<GroupElement> witness;
    bool exact = true;
    int upper = 0;           // matches size when exact
    std::int64_t nodes = 0;  // search nodes expanded
};

// Exact maximum progression-free subset size by branch and bound over the
// forbidden-triple hypergraph, with pair propagation and a disjoint-triple
// packing bound. On budget exhaustion returns the best verified witness with
// exact = false and a valid upper bracket.
R3Result r3_exact(const GroupSpec& spec, const SearchBudget& budget = {},
                  bool forbid_semitrivial = false);

// Randomized-restart greedy insertion; the witness is always re-verified.
R3Result r3_greedy(const GroupSpec& spec, const SearchBudget& budget = {},
                   bool forbid_semitrivial = false);

struct ProductLemmaReport {
    int lhs = 0;  // r3 of the product group
    int rhs = 0;  // product of the factor values
    bool holds = false;
    bool lhs_exact = true;
    bool product_witness_ap_free = false;
};

// Checks r3(G1 x G2) >= r3(G1) * r3(G2) and that the explicit product of the
// two witnesses is itself progression-free.
ProductLemmaReport check_product_lemma(const GroupSpec& g1, const GroupSpec& g2,
                                       const SearchBudget& budget = {});

// Hypothesis/conclusion evaluation for the squares-subgroup criterion, with
// X = Z = X(rho) and Y = X(1-2 rho) inside the ring of the subgroup of
// doubled elements, uniform weights, codimensions counted exactly.
struct MainLemmaReport {
    bool applicable = false;
    bool hypothesis_i = false;
    bool hypothesis_ii = false;
    bool hypothesis_iii = false;
    BigInt codim_x;
    BigInt codim_y;
    BigInt codim_z;
    BigInt squares_size;  // |A^2|
    bool all_hypotheses = false;
    bool conclusion_checked = false;  // progression found whenever all hold
};

MainLemmaReport check_main_lemma(const GroupSpec& spec, const std::vector<GroupElement>& a,
                                 double rho);

}  // namespace proglab
