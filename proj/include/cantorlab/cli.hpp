#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantorlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`. Returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cantorlab
