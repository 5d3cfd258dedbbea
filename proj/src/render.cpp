#include "streaks/render.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>

namespace streaks {

Decimal decimal_string(const Rational& value, int places) {
    if (places < 0) throw std::invalid_argument("decimal_string: places must be >= 0");

    Natural num = boost::multiprecision::numerator(value);
    const Natural den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;

    Natural scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;

    const Natural scaled = num * scale;
    const Natural quotient = scaled / den;
    const bool exact = (scaled % den) == 0;

    std::string text;
    if (negative && quotient != 0) text += '-';
    text += Natural(quotient / scale).str();
    if (places > 0) {
        const std::string frac = Natural(quotient % scale).str();
        text += '.';
        text.append(static_cast<std::size_t>(places) - frac.size(), '0');
        text += frac;
    }
    return {std::move(text), exact};
}

std::string percent_string(const Rational& value) {
    return decimal_string(value * 100, 2).text + '%';
}

std::string format_double(double value, int places) {
    if (places < 0) throw std::invalid_argument("format_double: places must be >= 0");
    std::array<char, 512> buffer;
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                      std::chars_format::fixed, places);
    if (result.ec != std::errc())
        throw std::runtime_error("format_double: value does not fit the buffer");
    return std::string(buffer.data(), result.ptr);
}

}  // namespace streaks
