#pragma once

/**
 * @file render.hpp
 * @brief Locale-independent number rendering for reports.
 *
 * Exact rationals are rendered by scaling and integer division, so the
 * digits shown are the leading digits of the true value (truncation
 * toward zero), never a reformatted double. The `exact` flag says
 * whether the value has terminated within the requested places, which
 * drives the "=" vs "~" distinction in report text.
 */

#include <string>

#include "streaks/natural.hpp"

namespace streaks {

struct Decimal {
    std::string text;
    bool exact = false;  // true when no digits were cut off
};

/// `value` in fixed notation with exactly `places` fractional digits,
/// truncated toward zero. places must be non-negative.
Decimal decimal_string(const Rational& value, int places);

/// `value` scaled to percent with two fractional digits and a trailing
/// '%', e.g. 1853/6229 -> "29.74%".
std::string percent_string(const Rational& value);

/// Fixed-notation double with `places` fractional digits, via
/// std::to_chars (round-to-nearest, locale-independent).
std::string format_double(double value, int places);

}  // namespace streaks
