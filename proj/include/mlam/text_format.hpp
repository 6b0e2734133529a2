#pragma once

#include <string>

namespace mlam {

/// Shortest decimal form that round-trips the exact double ("28", "10.5").
std::string format_shortest(double value);

/// Fixed-point form with the given number of decimals ("669.77").
std::string format_fixed(double value, int decimals);

}  // namespace mlam
