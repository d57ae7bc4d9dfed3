#pragma once

// Unit-suffixed quantity parsing for configuration and CLI input.
//
// Values are converted to watts, joules or hertz by shifting the decimal
// exponent of the numeric text ("39 mW" becomes "39e-3") and parsing once,
// so a prefixed value and its base-unit spelling give the same double.

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "bfpower/errors.hpp"
#include "bfpower/format.hpp"

namespace bfpower {

enum class Quantity { power, energy, frequency };

inline std::string_view base_unit(Quantity q) {
  switch (q) {
    case Quantity::power: return "W";
    case Quantity::energy: return "J";
    case Quantity::frequency: return "Hz";
  }
  return "";
}

namespace detail {

struct UnitSuffix {
  std::string_view text;
  Quantity quantity;
  int exponent;
};

inline constexpr std::array<UnitSuffix, 15> kUnitSuffixes{{
    {"W", Quantity::power, 0},
    {"kW", Quantity::power, 3},
    {"mW", Quantity::power, -3},
    {"uW", Quantity::power, -6},
    {"nW", Quantity::power, -9},
    {"J", Quantity::energy, 0},
    {"mJ", Quantity::energy, -3},
    {"uJ", Quantity::energy, -6},
    {"nJ", Quantity::energy, -9},
    {"pJ", Quantity::energy, -12},
    {"fJ", Quantity::energy, -15},
    {"Hz", Quantity::frequency, 0},
    {"kHz", Quantity::frequency, 3},
    {"MHz", Quantity::frequency, 6},
    {"GHz", Quantity::frequency, 9},
}};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline const UnitSuffix* find_suffix(std::string_view unit) {
  for (const auto& s : kUnitSuffixes) {
    if (s.text == unit) return &s;
  }
  return nullptr;
}

}  // namespace detail

// Parses "<number> <unit>" (space optional) into the base unit of `q`.
inline double parse_quantity(std::string_view text, Quantity q) {
  const std::string_view s = detail::trim(text);
  std::size_t split = s.size();
  while (split > 0 && std::isalpha(static_cast<unsigned char>(s[split - 1]))) --split;
  const std::string_view number = detail::trim(s.substr(0, split));
  const std::string_view unit = s.substr(split);
  if (number.empty()) {
    throw UnitError("missing numeric value in '" + std::string(text) + "'");
  }
  if (unit.empty()) {
    throw UnitError("missing unit in '" + std::string(text) + "' (expected " +
                    std::string(base_unit(q)) + " with optional prefix)");
  }
  const auto* suffix = detail::find_suffix(unit);
  if (suffix == nullptr || suffix->quantity != q) {
    throw UnitError("unit '" + std::string(unit) + "' is not a " + std::string(base_unit(q)) +
                    " unit");
  }

  // Fold the prefix into the exponent of the numeric text.
  std::string mantissa(number);
  int exponent = suffix->exponent;
  if (const auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
    int written = 0;
    const char* first = mantissa.data() + e + 1;
    const char* last = mantissa.data() + mantissa.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, written);
    if (ec != std::errc{} || ptr != last) {
      throw UnitError("malformed number '" + std::string(number) + "'");
    }
    exponent += written;
    mantissa.resize(e);
  }
  const std::string shifted = mantissa + "e" + std::to_string(exponent);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(shifted.data(), shifted.data() + shifted.size(), value);
  if (ec != std::errc{} || ptr != shifted.data() + shifted.size() || !std::isfinite(value)) {
    throw UnitError("malformed number '" + std::string(number) + "'");
  }
  return value;
}

inline double parse_power(std::string_view text) { return parse_quantity(text, Quantity::power); }
inline double parse_energy(std::string_view text) { return parse_quantity(text, Quantity::energy); }
inline double parse_frequency(std::string_view text) {
  return parse_quantity(text, Quantity::frequency);
}

// Base-unit rendering that parse_quantity reads back exactly.
inline std::string render_quantity(double value, Quantity q) {
  return shortest(value) + " " + std::string(base_unit(q));
}

}  // namespace bfpower
