#include "proglab/behrend.hpp"

#include <cmath>
#include <stdexcept>

#include "proglab/errors.hpp"

namespace proglab {

namespace {

void check_sphere(const SphereSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("sphere: dimension must be >= 1");
    if (spec.modulus != 4 && spec.modulus != 8) {
        throw std::invalid_argument("sphere: modulus must be 4 or 8");
    }
    if (spec.radius2 < 0) throw std::invalid_argument("sphere: squared radius must be >= 0");
}

// Full DP table of counts per squared distance, indexed 0..max_radius2.
std::vector<BigInt> distance_counts(int dim, int modulus, std::int64_t max_radius2) {
    const int center = modulus == 8 ? 2 : 1;
    const int values = modulus == 8 ? 5 : 3;
    std::vector<BigInt> table(static_cast<std::size_t>(max_radius2) + 1, BigInt(0));
    table[0] = 1;
    for (int i = 0; i < dim; ++i) {
        std::vector<BigInt> next(table.size(), BigInt(0));
        for (std::int64_t d = 0; d <= max_radius2; ++d) {
            if (table[static_cast<std::size_t>(d)] == 0) continue;
            for (int v = 0; v < values; ++v) {
                const std::int64_t sq = static_cast<std::int64_t>(v - center) * (v - center);
                if (d + sq > max_radius2) continue;
                next[static_cast<std::size_t>(d + sq)] += table[static_cast<std::size_t>(d)];
            }
        }
        table = std::move(next);
    }
    return table;
}

}  // namespace

BigInt sphere_count(const SphereSpec& spec) {
    check_sphere(spec);
    const std::int64_t per_coord_max = spec.modulus == 8 ? 4 : 1;
    if (spec.radius2 > per_coord_max * spec.dim) return 0;
    return distance_counts(spec.dim, spec.modulus, spec.radius2).back();
}

std::int64_t default_radius2(int n, int modulus) {
    if (n < 1) throw std::invalid_argument("default_radius2: dimension must be >= 1");
    if (modulus == 8) return 2 * static_cast<std::int64_t>(n);
    if (modulus != 4) throw std::invalid_argument("default_radius2: modulus must be 4 or 8");
    const auto table = distance_counts(n, 4, n);
    std::int64_t best = 0;
    for (std::size_t r = 1; r < table.size(); ++r) {
        if (table[r] > table[static_cast<std::size_t>(best)]) best = static_cast<std::int64_t>(r);
    }
    return best;
}

std::vector<GroupElement> build_behrend_set(int n, int modulus, std::optional<std::int64_t> radius2) {
    SphereSpec spec{n, modulus, radius2 ? *radius2 : default_radius2(n, modulus)};
    check_sphere(spec);

    double points = std::pow(static_cast<double>(spec.value_count()), n);
    if (points > 1e7) {
        throw TooLarge("build_behrend_set: enumeration infeasible, use sphere_count");
    }

    std::vector<GroupElement> out;
    std::vector<std::uint32_t> coords(static_cast<std::size_t>(n), 0);
    const int values = spec.value_count();
    const int center = spec.center();
    while (true) {
        std::int64_t dist2 = 0;
        for (auto c : coords) {
            const std::int64_t off = static_cast<std::int64_t>(c) - center;
            dist2 += off * off;
        }
        if (dist2 == spec.radius2) out.emplace_back(coords);
        std::size_t pos = coords.size();
        while (pos > 0 && ++coords[pos - 1] == static_cast<std::uint32_t>(values)) {
            coords[--pos] = 0;
        }
        if (pos == 0) break;
    }
    return out;
}

std::vector<GrowthRow> growth_report(const std::vector<int>& dims, int modulus) {
    if (modulus != 4 && modulus != 8) {
        throw std::invalid_argument("growth_report: modulus must be 4 or 8");
    }
    const double log2_base = std::log2(modulus == 8 ? 5.0 : 3.0);
    std::vector<GrowthRow> rows;
    rows.reserve(dims.size());
    for (int n : dims) {
        GrowthRow row;
        row.n = n;
        row.radius2 = default_radius2(n, modulus);
        row.count = sphere_count({n, modulus, row.radius2});
        row.ratio = row.count == 0
                        ? 0.0
                        : std::exp2(log2_big(row.count) + 0.5 * std::log2(double(n)) - n * log2_base);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace proglab
