#pragma once

#include <string>

namespace bcr {

/// Fixed-point text with `decimals` digits, rounding ties away from zero on the
/// shortest decimal form of `value` (so 6.125 -> "6.13" and 2.165 -> "2.17",
/// as a reader of the printed number would expect).
std::string format_fixed(double value, int decimals);

}  // namespace bcr
