#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gtwist/rotation_system.hpp"

namespace gtwist {

// Parsed rotation-system file.  External files may label vertices with
// arbitrary non-negative integers; they are densified to 0..n-1 in ascending
// label order and the original labels are kept in `original_labels`.
struct ParsedRotationSystem {
    RotationSystem rs;
    std::vector<long long> original_labels;  // original_labels[dense id] = file label
};

// Text format (.rs.txt):
//   - optional '#' comment lines anywhere
//   - first non-comment line: "n <count>"
//   - then exactly n lines "<v>: a b c ..." giving the clockwise rotation of v
// Throws ParseError with a 1-based line number.
ParsedRotationSystem parse_rotation_system(std::string_view text);

// Canonical serialization: dense labels, rotations as stored (each shifted to
// start at its smallest entry).  parse(serialize(rs)).rs == rs.
std::string serialize(const RotationSystem& rs);

// File helpers; throw ParseError (read/parse) or std::runtime_error (write).
ParsedRotationSystem read_rotation_system_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace gtwist
