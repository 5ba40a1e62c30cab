#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "proglab/group.hpp"

namespace proglab {

// Plain-text exchange format for subsets of a group:
//   # group: 8^2
//   0,2
//   4,2
// Blank lines and other '#' lines are ignored; duplicates are rejected.
struct SetFile {
    GroupSpec group;
    std::vector<GroupElement> elements;
};

SetFile read_set_file(std::istream& in);
SetFile read_set_file_path(const std::string& path);
void write_set_file(std::ostream& out, const GroupSpec& spec,
                    const std::vector<GroupElement>& elements);
void write_set_file_path(const std::string& path, const GroupSpec& spec,
                         const std::vector<GroupElement>& elements);

}  // namespace proglab
