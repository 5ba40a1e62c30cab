#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proglab/group.hpp"
#include "proglab/numeric.hpp"

namespace proglab {

struct WeightedItem {
    std::int64_t id = 0;
    Rational weight = 0;
};

// Items with nonnegative weights grouped into classes, optionally with the
// classes grouped further into superclasses.
class WeightedPartition {
public:
    WeightedPartition() = default;
    WeightedPartition(std::vector<WeightedItem> items, std::map<std::int64_t, std::string> class_of,
                      std::optional<std::map<std::string, std::string>> superclass_of = std::nullopt);

    const std::vector<WeightedItem>& items() const { return items_; }
    const std::map<std::int64_t, std::string>& class_of() const { return class_of_; }
    bool has_superclasses() const { return superclass_of_.has_value(); }
    const std::map<std::string, std::string>& superclass_of() const;

    int max_class_size() const;             // m
    int max_classes_per_superclass() const; // m'
    Rational total_weight() const;

private:
    std::vector<WeightedItem> items_;
    std::map<std::int64_t, std::string> class_of_;
    std::optional<std::map<std::string, std::string>> superclass_of_;
};

// A subset meeting every class in either 0 or exactly k items; when extracted
// at two levels, additionally every superclass holds 0 or exactly k_prime of
// the selected classes.
struct RegularSubset {
    std::vector<std::int64_t> ids;  // sorted
    int k = 0;
    std::optional<int> k_prime;
    Rational weight = 0;
};

// H_m = 1 + 1/2 + ... + 1/m, exactly.
Rational harmonic(int m);

// Picks, for every candidate count k, the k heaviest items of each class that
// has at least k (ties to the smaller id) and keeps the heaviest candidate.
// The winner's weight is at least total/H_m.
RegularSubset extract_regular(const WeightedPartition& p);

// Two-stage extraction: first over classes, then over the surviving classes
// grouped by superclass. Weight at least total/(H_m * H_m').
RegularSubset extract_super_regular(const WeightedPartition& p);

// Unit-weight partition of a subset of a group, keyed by doubling (level 1)
// or quadrupling (level 2 adds superclasses) of each element.
WeightedPartition partition_by_power(const GroupSpec& spec, const std::vector<GroupElement>& a,
                                     int level);

}  // namespace proglab
