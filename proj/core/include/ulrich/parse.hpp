#pragma once

#include <string>
#include <string_view>

#include "ulrich/root_system.hpp"

namespace ulrich {

// Input error with the offset of the offending character.
struct ParseError : std::runtime_error {
  std::size_t position;

  ParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message), position(pos) {}
};

struct VarietySpec {
  DynkinType type;
  int k;  // 1-based marked node

  std::string to_string() const;  // e.g. "E6/P1"

  friend bool operator==(const VarietySpec&, const VarietySpec&) = default;
};

// Grammar: <SERIES><RANK>/P<NODE>, e.g. "E6/P1". Series A..G; rank checked
// against the series; the node must lie in [1, rank].
VarietySpec parse_variety(std::string_view text);

// Sum of signed terms [<int>]w<idx>, e.g. "w5+3w6", "-2w1+w3". Spaces are
// ignored, duplicate indices are summed, the empty sum is the zero weight.
Weight parse_weight(std::string_view text, int rank);

// Inverse of parse_weight on canonical output: "w5+3w6", "0" for zero.
std::string weight_to_expr(const Weight& w);

}  // namespace ulrich
