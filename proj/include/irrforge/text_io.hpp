#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "irrforge/graph.hpp"

namespace irrforge {

// Edge-list format: first line "n", then n-1 lines "u v".
Tree parse_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
std::string format_edge_list(const Tree& t);

// Comma-separated integers, whitespace tolerated. Order is preserved.
std::vector<int> parse_int_list(const std::string& text);
DegreeSequence parse_degree_sequence(const std::string& text);

}  // namespace irrforge
