#pragma once

#include <string>

namespace shapeassoc {

/// Shortest decimal that parses back to exactly the same double.
[[nodiscard]] std::string format_roundtrip(double v);

/// printf("%.*g")-style formatting with the given significant digits.
[[nodiscard]] std::string format_general(double v, int precision);

}  // namespace shapeassoc
