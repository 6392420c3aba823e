#pragma once

#include <string>
#include <string_view>

namespace augopt {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

/// Strict parse of a full token; throws Error on trailing garbage.
double parse_double(std::string_view s);

}  // namespace augopt
