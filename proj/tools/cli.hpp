#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digifix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;

/// Runs one verb. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digifix::cli
