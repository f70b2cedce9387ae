#pragma once

#include <string>

namespace arrowhead {

// Locale-independent shortest-form rendering with the given number of
// significant digits ('.' separator, exponent when needed).
std::string format_double(double value, int significant_digits = 17);

}  // namespace arrowhead
