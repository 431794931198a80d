#include "shapeassoc/numfmt.hpp"

#include <array>
#include <charconv>

namespace shapeassoc {

std::string format_roundtrip(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

std::string format_general(double v, int precision) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, precision);
    return std::string(buf.data(), end);
}

}  // namespace shapeassoc
