#pragma once

#include <string>

namespace cauchynet {

/// Shortest decimal form that parses back to the same double; "nan", "inf"
/// and "-inf" for non-finite values.
std::string format_double(double v);

std::string format_fixed(double v, int decimals);

/// Parses a whole string as a double (leading/trailing blanks allowed).
/// Returns false on any leftover characters.
bool parse_double(std::string_view text, double& out);

}  // namespace cauchynet
