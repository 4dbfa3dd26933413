#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace scarf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p", "+p" or "-p" with arbitrary-precision integers.
/// Throws InputError on anything else (including q = 0).
Rat parse_rational(const std::string& text);

/// Canonical text form: "n" for integers, "p/q" otherwise (q > 0, reduced).
std::string rational_string(const Rat& value);

/// Truncated decimal expansion with `digits` places after the point.
std::string decimal_string(const Rat& value, int digits);

bool is_integer(const Rat& value);

}  // namespace scarf
