#include "arrowhead/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "arrowhead/error.hpp"

namespace arrowhead {

std::string format_double(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                    std::chars_format::general, significant_digits);
  if (result.ec != std::errc{}) throw Error(ErrorCode::internal, "format_double: buffer too small");
  return std::string(buffer.data(), result.ptr);
}

}  // namespace arrowhead
