#include "plwd/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace plwd {

std::string format_shortest(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), ptr};
}

std::string format_human(double value) {
    if (std::isinf(value)) {
        return "inf";
    }
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.6g", value);
    return {buf.data(), static_cast<std::size_t>(n)};
}

}  // namespace plwd
