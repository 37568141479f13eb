#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tinv/bounds.hpp"
#include "tinv/config.hpp"
#include "tinv/ramsey.hpp"
#include "tinv/relation.hpp"

namespace tinv {

// Text formats. Everything after '#' on a line is ignored.
//
//   relation:  domain: 0 1 2      coloring:  vertices: 1 2 3
//              1 0                           colors: 2
//              2 1                           1 2 0
//                                            ...
//   function:  x value            set:       whitespace separated naturals
//
// A relation file without a domain header takes the edge endpoints as domain.

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

FiniteRelation parse_relation(std::string_view text, const Caps& caps = {});
std::string format_relation(const FiniteRelation& r);

StateFunction parse_state_function(std::string_view text);
/// Also checks that every domain state has a value.
StateFunction parse_state_function(std::string_view text, const FiniteRelation& r);

Coloring parse_coloring(std::string_view text);
std::string format_coloring(const Coloring& c);

StateSet parse_state_set(std::string_view text);

}  // namespace tinv
