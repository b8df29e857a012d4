#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace bubblestat {

/// Round to `places` decimals with ties to even (the default FP rounding mode).
[[nodiscard]] inline double round_half_even(double value, int places) noexcept {
    const double scale = std::pow(10.0, places);
    return std::nearbyint(value * scale) / scale;
}

/// Fixed-point text with `places` decimals.
[[nodiscard]] inline std::string format_fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, value);
    return buf;
}

/// Compact reproducible text for data files (12 significant digits).
[[nodiscard]] inline std::string format_compact(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace bubblestat
