#include "tmoments/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace tmoments {

namespace {

std::string non_finite(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    return value < 0.0 ? "-inf" : "inf";
}

}  // namespace

std::string format_significant(double value, int digits)
{
    if (!std::isfinite(value)) {
        return non_finite(value);
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, digits);
    return std::string(buf.data(), res.ptr);
}

std::string format_roundtrip(double value)
{
    if (!std::isfinite(value)) {
        return non_finite(value);
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

}  // namespace tmoments
