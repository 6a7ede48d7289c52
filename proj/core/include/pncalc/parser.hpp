#pragma once

#include <string_view>

#include "pncalc/ratfunc.hpp"

namespace pncalc {

/// Parses a component expression over the chart coordinates.
///
///   expr     := term { ("+" | "-") term }
///   term     := factor { ("*" | "/") factor }
///   factor   := ["-"] base [ "^" ["-"] integer ]
///   base     := rational | identifier | "(" expr ")"
///   rational := integer [ "/" positive-integer ]
///
/// "-x^2" is -(x^2). Implicit multiplication ("2x") and function calls are
/// rejected. Throws SyntaxError, UnknownIdentifier, DivisionByZeroConstant,
/// or DivisionByZero.
RatFunc parse_expr(std::string_view text, const Chart& chart);

}  // namespace pncalc
