#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

namespace pncalc::detail {

/// Reads the TOML subset used by structure files into a JSON value:
/// key/value pairs, [table] and [[array of tables]] headers, basic and
/// literal strings, integers, booleans, arrays and inline tables. Dotted
/// keys, floats, dates and multi-line strings are rejected. Throws
/// ParseError with a 1-based line and column.
nlohmann::json parse_toml(std::string_view text);

}  // namespace pncalc::detail
