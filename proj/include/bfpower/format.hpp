#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

namespace bfpower {

// Shortest decimal string that parses back to exactly `value`.
inline std::string shortest(double value) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

inline std::string significant(double value, int digits) {
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", digits, value);
  return buf.data();
}

// Display form of a value; digits <= 0 means full round-trip precision.
inline std::string display(double value, int digits) {
  return digits > 0 ? significant(value, digits) : shortest(value);
}

// "127.5 MHz" style rendering for values in base SI units.
inline std::string with_si_prefix(double value, std::string_view unit, int digits) {
  static constexpr std::array<std::pair<double, const char*>, 9> kPrefixes{{
      {1e12, "T"}, {1e9, "G"}, {1e6, "M"}, {1e3, "k"}, {1.0, ""},
      {1e-3, "m"}, {1e-6, "u"}, {1e-9, "n"}, {1e-12, "p"},
  }};
  const double mag = std::fabs(value);
  for (const auto& [scale, prefix] : kPrefixes) {
    if (mag >= scale || scale == 1e-12) {
      return display(value / scale, digits) + " " + prefix + std::string(unit);
    }
  }
  return display(value, digits) + " " + std::string(unit);
}

}  // namespace bfpower
