#include "proglab/group.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "proglab/errors.hpp"

namespace proglab {

GroupSpec::GroupSpec(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
    for (auto m : moduli_) {
        if (m == 0) throw std::invalid_argument("GroupSpec: modulus must be >= 1");
    }
}

namespace {

std::uint32_t parse_u32(std::string_view token) {
    std::uint32_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
        throw std::invalid_argument("GroupSpec: bad token '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
        if (c != ' ' && c != '\t') cleaned.push_back(c);
    }
    if (cleaned.empty()) throw std::invalid_argument("GroupSpec: empty spec string");

    std::vector<std::uint32_t> moduli;
    std::string_view rest = cleaned;
    while (!rest.empty()) {
        const auto sep = rest.find('x');
        if (sep != std::string_view::npos && sep + 1 == rest.size()) {
            throw std::invalid_argument("GroupSpec: dangling separator");
        }
        std::string_view factor = rest.substr(0, sep);
        rest = sep == std::string_view::npos ? std::string_view{} : rest.substr(sep + 1);

        const auto caret = factor.find('^');
        std::uint32_t base = parse_u32(caret == std::string_view::npos ? factor : factor.substr(0, caret));
        std::uint32_t power = caret == std::string_view::npos ? 1 : parse_u32(factor.substr(caret + 1));
        if (power > 4096) throw std::invalid_argument("GroupSpec: power too large");
        for (std::uint32_t i = 0; i < power; ++i) moduli.push_back(base);
    }
    return GroupSpec(std::move(moduli));
}

std::string GroupSpec::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < moduli_.size();) {
        std::size_t run = i;
        while (run < moduli_.size() && moduli_[run] == moduli_[i]) ++run;
        if (i > 0) out << 'x';
        out << moduli_[i];
        if (run - i > 1) out << '^' << (run - i);
        i = run;
    }
    return out.str();
}

BigInt GroupSpec::order() const {
    BigInt n = 1;
    for (auto m : moduli_) n *= m;
    return n;
}

bool GroupSpec::is_two_group() const {
    for (auto m : moduli_) {
        if ((m & (m - 1)) != 0) return false;
    }
    return true;
}

void check_element(const GroupSpec& spec, const GroupElement& g) {
    if (g.residues.size() != spec.dim()) {
        throw InvalidElement("element dimension " + std::to_string(g.residues.size()) +
                             " does not match group dimension " + std::to_string(spec.dim()));
    }
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        if (g.residues[i] >= spec.modulus(i)) {
            throw InvalidElement("residue " + std::to_string(g.residues[i]) +
                                 " out of range for modulus " + std::to_string(spec.modulus(i)));
        }
    }
}

GroupElement identity(const GroupSpec& spec) {
    return GroupElement(std::vector<std::uint32_t>(spec.dim(), 0));
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    check_element(spec, a);
    check_element(spec, b);
    GroupElement out;
    out.residues.resize(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        const std::uint64_t s = std::uint64_t(a.residues[i]) + b.residues[i];
        out.residues[i] = static_cast<std::uint32_t>(s >= spec.modulus(i) ? s - spec.modulus(i) : s);
    }
    return out;
}

GroupElement neg(const GroupSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    GroupElement out;
    out.residues.resize(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        out.residues[i] = g.residues[i] == 0 ? 0 : spec.modulus(i) - g.residues[i];
    }
    return out;
}

GroupElement square(const GroupSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    GroupElement out;
    out.residues.resize(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        out.residues[i] = static_cast<std::uint32_t>((2ull * g.residues[i]) % spec.modulus(i));
    }
    return out;
}

GroupElement class_key(const GroupSpec& spec, const GroupElement& g, int level) {
    if (level != 1 && level != 2) {
        throw std::invalid_argument("class_key: level must be 1 or 2");
    }
    GroupElement key = square(spec, g);
    if (level == 2) key = square(spec, key);
    return key;
}

bool is_progression(const GroupSpec& spec, const GroupElement& a, const GroupElement& b,
                    const GroupElement& c) {
    check_element(spec, a);
    check_element(spec, b);
    check_element(spec, c);
    if (a == b || b == c || a == c) return false;
    return add(spec, a, c) == square(spec, b);
}

bool index_fits(const GroupSpec& spec) {
    BigInt n = spec.order();
    return n <= BigInt(std::numeric_limits<std::int64_t>::max());
}

std::uint64_t element_index(const GroupSpec& spec, const GroupElement& g) {
    check_element(spec, g);
    std::uint64_t index = 0;
    for (std::size_t i = spec.dim(); i-- > 0;) {
        index = index * spec.modulus(i) + g.residues[i];
    }
    return index;
}

GroupElement element_at(const GroupSpec& spec, std::uint64_t index) {
    GroupElement out;
    out.residues.resize(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        out.residues[i] = static_cast<std::uint32_t>(index % spec.modulus(i));
        index /= spec.modulus(i);
    }
    if (index != 0) throw InvalidElement("element index out of range");
    return out;
}

}  // namespace proglab
