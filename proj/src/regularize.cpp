#include "proglab/regularize.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "proglab/errors.hpp"

namespace proglab {

WeightedPartition::WeightedPartition(std::vector<WeightedItem> items,
                                     std::map<std::int64_t, std::string> class_of,
                                     std::optional<std::map<std::string, std::string>> superclass_of)
    : items_(std::move(items)), class_of_(std::move(class_of)), superclass_of_(std::move(superclass_of)) {
    std::set<std::int64_t> seen;
    for (const auto& item : items_) {
        if (item.weight < 0) throw std::invalid_argument("WeightedPartition: negative weight");
        if (!seen.insert(item.id).second) {
            throw std::invalid_argument("WeightedPartition: duplicate item id");
        }
        if (class_of_.find(item.id) == class_of_.end()) {
            throw std::invalid_argument("WeightedPartition: item without a class");
        }
    }
    if (superclass_of_) {
        for (const auto& item : items_) {
            const auto& cls = class_of_.at(item.id);
            if (superclass_of_->find(cls) == superclass_of_->end()) {
                throw std::invalid_argument("WeightedPartition: class without a superclass");
            }
        }
    }
}

const std::map<std::string, std::string>& WeightedPartition::superclass_of() const {
    if (!superclass_of_) throw std::invalid_argument("WeightedPartition: no superclass structure");
    return *superclass_of_;
}

int WeightedPartition::max_class_size() const {
    std::map<std::string, int> sizes;
    for (const auto& item : items_) ++sizes[class_of_.at(item.id)];
    int m = 0;
    for (const auto& [key, size] : sizes) m = std::max(m, size);
    return m;
}

int WeightedPartition::max_classes_per_superclass() const {
    if (!superclass_of_) return 0;
    std::set<std::string> occupied;
    for (const auto& item : items_) occupied.insert(class_of_.at(item.id));
    std::map<std::string, int> sizes;
    for (const auto& cls : occupied) ++sizes[superclass_of_->at(cls)];
    int m = 0;
    for (const auto& [key, size] : sizes) m = std::max(m, size);
    return m;
}

Rational WeightedPartition::total_weight() const {
    Rational total = 0;
    for (const auto& item : items_) total += item.weight;
    return total;
}

Rational harmonic(int m) {
    if (m < 1) throw std::invalid_argument("harmonic: m must be >= 1");
    Rational h = 0;
    for (int i = 1; i <= m; ++i) h += Rational(1, i);
    return h;
}

RegularSubset extract_regular(const WeightedPartition& p) {
    RegularSubset out;
    if (p.items().empty()) return out;

    // Per class, items sorted heaviest first (ties to the smaller id).
    std::map<std::string, std::vector<const WeightedItem*>> classes;
    for (const auto& item : p.items()) classes[p.class_of().at(item.id)].push_back(&item);
    for (auto& [key, members] : classes) {
        std::sort(members.begin(), members.end(), [](const WeightedItem* a, const WeightedItem* b) {
            if (a->weight != b->weight) return a->weight > b->weight;
            return a->id < b->id;
        });
    }

    const int m = p.max_class_size();
    int best_k = 1;
    Rational best_weight = -1;
    for (int k = 1; k <= m; ++k) {
        Rational weight = 0;
        for (const auto& [key, members] : classes) {
            if (static_cast<int>(members.size()) < k) continue;
            for (int i = 0; i < k; ++i) weight += members[i]->weight;
        }
        if (weight > best_weight) {
            best_weight = weight;
            best_k = k;
        }
    }

    out.k = best_k;
    out.weight = best_weight;
    for (const auto& [key, members] : classes) {
        if (static_cast<int>(members.size()) < best_k) continue;
        for (int i = 0; i < best_k; ++i) out.ids.push_back(members[i]->id);
    }
    std::sort(out.ids.begin(), out.ids.end());
    return out;
}

RegularSubset extract_super_regular(const WeightedPartition& p) {
    if (!p.has_superclasses()) {
        throw std::invalid_argument("extract_super_regular: superclass structure required");
    }
    const RegularSubset first = extract_regular(p);
    if (first.ids.empty()) {
        RegularSubset out = first;
        out.k_prime = 0;
        return out;
    }

    // Classes surviving the first stage become items of a second partition,
    // weighted by their selected mass and classed by superclass.
    std::map<std::string, Rational> class_weight;
    std::map<std::string, std::vector<std::int64_t>> class_members;
    {
        std::set<std::int64_t> chosen(first.ids.begin(), first.ids.end());
        std::map<std::int64_t, Rational> weight_of;
        for (const auto& item : p.items()) weight_of[item.id] = item.weight;
        for (auto id : first.ids) {
            const auto& cls = p.class_of().at(id);
            class_weight[cls] += weight_of.at(id);
            class_members[cls].push_back(id);
        }
    }

    std::vector<WeightedItem> stage2_items;
    std::map<std::int64_t, std::string> stage2_class_of;
    std::vector<std::string> class_keys;
    for (const auto& [key, weight] : class_weight) class_keys.push_back(key);
    std::sort(class_keys.begin(), class_keys.end());
    for (std::size_t i = 0; i < class_keys.size(); ++i) {
        const auto id = static_cast<std::int64_t>(i);
        stage2_items.push_back({id, class_weight.at(class_keys[i])});
        stage2_class_of[id] = p.superclass_of().at(class_keys[i]);
    }

    const RegularSubset second = extract_regular(WeightedPartition(stage2_items, stage2_class_of));

    RegularSubset out;
    out.k = first.k;
    out.k_prime = second.k;
    out.weight = second.weight;
    for (auto stage2_id : second.ids) {
        const auto& cls = class_keys[static_cast<std::size_t>(stage2_id)];
        for (auto id : class_members.at(cls)) out.ids.push_back(id);
    }
    std::sort(out.ids.begin(), out.ids.end());
    return out;
}

namespace {

std::string residue_key(const GroupElement& g) {
    std::ostringstream key;
    for (std::size_t i = 0; i < g.residues.size(); ++i) {
        if (i > 0) key << ',';
        key << g.residues[i];
    }
    return key.str();
}

}  // namespace

WeightedPartition partition_by_power(const GroupSpec& spec, const std::vector<GroupElement>& a,
                                     int level) {
    if (level != 1 && level != 2) {
        throw std::invalid_argument("partition_by_power: level must be 1 or 2");
    }
    std::set<GroupElement> seen;
    std::vector<WeightedItem> items;
    std::map<std::int64_t, std::string> class_of;
    std::map<std::string, std::string> superclass_of;
    for (std::size_t i = 0; i < a.size(); ++i) {
        check_element(spec, a[i]);
        if (!seen.insert(a[i]).second) {
            throw std::invalid_argument("partition_by_power: duplicate element");
        }
        const auto id = static_cast<std::int64_t>(i);
        items.push_back({id, Rational(1)});
        const std::string cls = residue_key(class_key(spec, a[i], 1));
        class_of[id] = cls;
        if (level == 2) superclass_of[cls] = residue_key(class_key(spec, a[i], 2));
    }
    if (level == 2) {
        return WeightedPartition(std::move(items), std::move(class_of), std::move(superclass_of));
    }
    return WeightedPartition(std::move(items), std::move(class_of));
}

}  // namespace proglab
