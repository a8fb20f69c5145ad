#pragma once

#include <string>

#include "lipsat/polynomial.hpp"

namespace lipsat {

/// Parses the shared textual polynomial syntax over a fixed variable list:
/// integer/rational literals, identifiers, + - * ^, parentheses. `^` binds
/// tighter than `*`, which binds tighter than `+`/`-`.
/// Throws ParseError with 1-based line/column on bad input.
Polynomial parse_polynomial(const std::string& text, const Vars& vars);

}  // namespace lipsat
