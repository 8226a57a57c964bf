#pragma once

#include <iosfwd>

namespace membranekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;   ///< bad configuration or domain error
inline constexpr int kExitAssert = 2;  ///< --assert envelope violated

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace membranekit::cli
