#pragma once

#include <string>
#include <string_view>

#include "titree/families.hpp"

namespace titree {

/// "P(7)", "S(3,2,1)", "C(9; 5,7)", "CV(9; 3:1, 5:1, 5:3)". Whitespace is
/// optional. Syntax errors and invalid parameters both raise ParseError
/// carrying the byte offset.
FamilySpec parse_family(std::string_view text);

/// Inverse of parse_family; the canonical spelling shown above.
std::string format_family(const FamilySpec& spec);

/// Edge list text: the order, then one "u v" pair per edge, separated by any
/// whitespace. Lines starting with '#' are comments.
Tree parse_edge_list(std::string_view text);

/// "n\nu v\n..." with edges in sorted order.
std::string format_edge_list(const Tree& t);

}  // namespace titree
