// Recursive-descent parser for the expression grammar used by the CLI and
// the config loader: identifiers (letter and group-generator names), `*`,
// `+`, `-`, `/`, integer `^` powers, parentheses, and the field generator
// `q` (or `z` in a cyclotomic field).  Whitespace-insensitive.
//
// Division requires a scalar divisor; negative powers require a scalar or a
// group-like base.

#pragma once

#include <string>

#include "qdeform/freealg.hpp"

namespace qdeform {

struct parse_error : error {
  parse_error(const std::string& msg, int pos)
      : error(msg + " at position " + std::to_string(pos)), position(pos) {}
  int position;
};

NcPoly parse_expression(DatumPtr datum, const std::string& text);

// Expression over the field only: no letters, no group generators.
Scalar parse_scalar(const Field& field, const std::string& text);

// A single group element like "K1^2*K2^-1" or "1".
GroupElement parse_group_element(GroupSpecPtr spec, const std::string& text);

}  // namespace qdeform
