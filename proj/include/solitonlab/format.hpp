#pragma once

#include <array>
#include <charconv>
#include <string>

namespace solitonlab {

/// Shortest round-trip decimal text for `value`; always uses '.' regardless of locale.
inline std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return ec == std::errc{} ? std::string(buf.data(), end) : std::string("nan");
}

}  // namespace solitonlab
