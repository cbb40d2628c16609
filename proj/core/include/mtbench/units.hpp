#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mtbench::units {

// Physical dimension of a config field. Everything is stored in SI; unit
// suffixes exist only at the text boundary.
enum class Dimension {
  Length,        // m
  Force,         // N
  Pressure,      // Pa
  Stiffness,     // N/m
  Velocity,      // m/s
  Frequency,     // Hz
  Time,          // s
  Dimensionless,
};

/// SI unit token for a dimension ("m", "Pa", ...); empty for dimensionless.
std::string_view si_unit(Dimension dim);

/// Conversion factor for a unit token, or nullopt if the token is not in the
/// table for that dimension. The table is exact: 1 um = 1e-6 m, 1 MPa = 1e6 Pa.
std::optional<double> unit_factor(Dimension dim, std::string_view unit);

/// Parse "600 um" / "103 GPa" / "0.5" into an SI value. Throws
/// InvalidInputError on malformed numbers or unknown units.
double parse_quantity(std::string_view text, Dimension dim);

/// Shortest round-trip decimal representation of a double (via to_chars).
std::string format_roundtrip(double value);

/// Fixed 9-significant-digit representation used for data files.
std::string format_sig9(double value);

}  // namespace mtbench::units
