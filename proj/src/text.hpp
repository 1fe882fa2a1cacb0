#ifndef STARFACT_SRC_TEXT_HPP
#define STARFACT_SRC_TEXT_HPP

#include <string_view>
#include <vector>

namespace starfact::detail {

// Splits "(a b c)(d e)" into integer groups. A group with no whitespace or
// comma is read one digit per element. Throws kParse on malformed input.
std::vector<std::vector<int>> parse_parenthesized_groups(std::string_view text);

}  // namespace starfact::detail

#endif  // STARFACT_SRC_TEXT_HPP
