#pragma once

#include "zerogrid/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zg {

// Expression grammar (documented in the README):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := number | var | '(' expr ')' | '-' base
//   number := uint ('/' uint)?        (rational literals; '/' only between digits)
// No implicit multiplication. Exponents are non-negative integers and bind to
// the base as written, so "-x^2" reads as (-x)^2; the canonical printer never
// emits that shape.

/// Parse an expression into canonical sparse form over the declared universe.
/// Throws Error{Parse} with a 1-based position, or Error{Domain} for an
/// undeclared variable.
Polynomial parse_polynomial(std::string_view text, std::vector<std::string> variables);

/// Identifiers in order of first appearance; used to infer a universe when
/// the caller does not declare one.
std::vector<std::string> scan_variables(std::string_view text);

}  // namespace zg
