#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace shapeassoc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitExpectation = 2;

/// Runs the command line without the program name. Output goes to `out` unless
/// an --output path is given; diagnostics go to `err`.
[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapeassoc::cli
