#pragma once

#include <string>

#include <json.hpp>

namespace qes {

/// Rounds to `digits` significant digits, so output is stable under last-bit noise.
double round_significant(double x, int digits = 12);

/// %.12g rendering used for CSV and text output.
std::string format_number(double x);

/// JSON number rounded to 12 significant digits; non-finite values become null.
nlohmann::json json_number(double x);

} // namespace qes
