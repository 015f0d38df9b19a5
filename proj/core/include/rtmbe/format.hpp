#pragma once

#include <array>
#include <charconv>
#include <string>

namespace rtmbe {

/// Shortest decimal string that parses back to exactly `value`. Locale
/// independent.
inline std::string shortest_repr(double value) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

}  // namespace rtmbe
