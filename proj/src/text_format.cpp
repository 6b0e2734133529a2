#include "mlam/text_format.hpp"

#include <charconv>
#include <cstdio>

namespace mlam {

std::string format_shortest(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  const int n =
      std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return std::string(buffer, buffer + n);
}

}  // namespace mlam
