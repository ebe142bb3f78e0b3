#pragma once

#include <string>

namespace tmoments {

// Locale-independent decimal rendering.

/// `digits` significant digits, shortest of fixed/scientific ("%g" style),
/// trailing zeros removed. NaN renders as "nan", infinities as "inf"/"-inf".
std::string format_significant(double value, int digits = 12);

/// Shortest representation that parses back to the same double.
std::string format_roundtrip(double value);

}  // namespace tmoments
