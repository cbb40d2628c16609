#include "mtbench/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include "mtbench/error.hpp"

namespace mtbench::units {

namespace {

struct UnitEntry {
  std::string_view token;
  double factor;
};

// Exact conversion table. Nothing outside this table is accepted.
constexpr std::array<UnitEntry, 5> kLength{{
    {"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}, {"pm", 1e-12}}};
constexpr std::array<UnitEntry, 3> kForce{{{"N", 1.0}, {"mN", 1e-3}, {"uN", 1e-6}}};
constexpr std::array<UnitEntry, 4> kPressure{{
    {"Pa", 1.0}, {"kPa", 1e3}, {"MPa", 1e6}, {"GPa", 1e9}}};
constexpr std::array<UnitEntry, 1> kStiffness{{{"N/m", 1.0}}};
constexpr std::array<UnitEntry, 4> kVelocity{{
    {"m/s", 1.0}, {"mm/s", 1e-3}, {"um/s", 1e-6}, {"nm/s", 1e-9}}};
constexpr std::array<UnitEntry, 1> kFrequency{{{"Hz", 1.0}}};
constexpr std::array<UnitEntry, 2> kTime{{{"s", 1.0}, {"ms", 1e-3}}};

template <size_t N>
std::optional<double> lookup(const std::array<UnitEntry, N>& table,
                             std::string_view unit) {
  for (const auto& e : table) {
    if (e.token == unit) return e.factor;
  }
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view si_unit(Dimension dim) {
  switch (dim) {
    case Dimension::Length: return "m";
    case Dimension::Force: return "N";
    case Dimension::Pressure: return "Pa";
    case Dimension::Stiffness: return "N/m";
    case Dimension::Velocity: return "m/s";
    case Dimension::Frequency: return "Hz";
    case Dimension::Time: return "s";
    case Dimension::Dimensionless: return "";
  }
  return "";
}

std::optional<double> unit_factor(Dimension dim, std::string_view unit) {
  switch (dim) {
    case Dimension::Length: return lookup(kLength, unit);
    case Dimension::Force: return lookup(kForce, unit);
    case Dimension::Pressure: return lookup(kPressure, unit);
    case Dimension::Stiffness: return lookup(kStiffness, unit);
    case Dimension::Velocity: return lookup(kVelocity, unit);
    case Dimension::Frequency: return lookup(kFrequency, unit);
    case Dimension::Time: return lookup(kTime, unit);
    case Dimension::Dimensionless:
      return unit.empty() ? std::optional<double>(1.0) : std::nullopt;
  }
  return std::nullopt;
}

double parse_quantity(std::string_view text, Dimension dim) {
  std::string_view s = trim(text);
  if (s.empty()) throw InvalidInputError("empty quantity");

  // Split into number and unit token at the first character that cannot
  // belong to a decimal literal.
  size_t pos = 0;
  while (pos < s.size()) {
    char c = s[pos];
    bool numeric = (c >= '0' && c <= '9') || c == '+' || c == '-' ||
                   c == '.' || c == 'e' || c == 'E';
    // 'e'/'E' only counts as numeric if followed by digit or sign
    if ((c == 'e' || c == 'E') &&
        !(pos + 1 < s.size() &&
          ((s[pos + 1] >= '0' && s[pos + 1] <= '9') || s[pos + 1] == '+' ||
           s[pos + 1] == '-'))) {
      numeric = false;
    }
    if (!numeric) break;
    ++pos;
  }
  std::string num(s.substr(0, pos));
  std::string_view unit = trim(s.substr(pos));

  if (num.empty()) throw InvalidInputError("quantity '" + std::string(s) + "' has no number");
  char* end = nullptr;
  double value = std::strtod(num.c_str(), &end);
  if (end != num.c_str() + num.size() || !std::isfinite(value)) {
    throw InvalidInputError("malformed number '" + num + "'");
  }

  std::optional<double> factor = unit_factor(dim, unit);
  if (!factor) {
    if (unit.empty()) {
      throw InvalidInputError("quantity '" + std::string(s) +
                              "' is missing a unit (expected " +
                              std::string(si_unit(dim)) + ")");
    }
    throw InvalidInputError("unknown unit '" + std::string(unit) + "' for " +
                            std::string(si_unit(dim)) + " quantity");
  }
  return value * *factor;
}

std::string format_roundtrip(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_sig9(double value) {
  std::array<char, 64> buf{};
  int n = std::snprintf(buf.data(), buf.size(), "%.9g", value);
  return std::string(buf.data(), static_cast<size_t>(n));
}

}  // namespace mtbench::units
