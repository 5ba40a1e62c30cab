#include "proglab/setfile.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace proglab {

namespace {

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

constexpr const char* kGroupPrefix = "# group:";

}  // namespace

SetFile read_set_file(std::istream& in) {
    SetFile file;
    bool have_group = false;
    std::set<GroupElement> seen;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trimmed(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind(kGroupPrefix, 0) == 0) {
                if (have_group) throw std::invalid_argument("set file: duplicate group header");
                file.group = GroupSpec::parse(line.substr(std::string(kGroupPrefix).size()));
                have_group = true;
            }
            continue;
        }
        if (!have_group) {
            throw std::invalid_argument("set file: element before the '# group:' header");
        }
        GroupElement g;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            const std::string tok = trimmed(field);
            std::uint32_t value = 0;
            const auto* end = tok.data() + tok.size();
            auto [ptr, ec] = std::from_chars(tok.data(), end, value);
            if (ec != std::errc{} || ptr != end) {
                throw std::invalid_argument("set file: bad residue on line " + std::to_string(line_no));
            }
            g.residues.push_back(value);
        }
        check_element(file.group, g);
        if (!seen.insert(g).second) {
            throw std::invalid_argument("set file: duplicate element on line " + std::to_string(line_no));
        }
        file.elements.push_back(std::move(g));
    }
    if (!have_group) throw std::invalid_argument("set file: missing '# group:' header");
    return file;
}

SetFile read_set_file_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("set file: cannot open " + path);
    return read_set_file(in);
}

void write_set_file(std::ostream& out, const GroupSpec& spec,
                    const std::vector<GroupElement>& elements) {
    out << kGroupPrefix << ' ' << spec.str() << '\n';
    for (const auto& g : elements) {
        check_element(spec, g);
        for (std::size_t i = 0; i < g.residues.size(); ++i) {
            if (i > 0) out << ',';
            out << g.residues[i];
        }
        out << '\n';
    }
}

void write_set_file_path(const std::string& path, const GroupSpec& spec,
                         const std::vector<GroupElement>& elements) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("set file: cannot open " + path + " for writing");
    write_set_file(out, spec, elements);
}

}  // namespace proglab
