#pragma once

#include <string>
#include <vector>

#include "cubinf/poly.hpp"

namespace cubinf {

struct ParseError : MathError {
  ParseError(const std::string& msg, size_t pos)
      : MathError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

/// Parse a polynomial over the named variables. Grammar: terms joined by
/// + and -; a term is [rational][*] monomial or a bare rational; rational is
/// integer or integer/integer; monomial is a product of var[^k] with optional
/// * separators; no parentheses. Whitespace is ignored.
PolyQ parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// Convenience: variables x0, x1, x2.
PolyQ parse_poly3(const std::string& text);

}  // namespace cubinf
