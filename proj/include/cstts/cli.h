#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cstts::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;      // configuration or I/O problem
inline constexpr int kExitConversion = 3;  // bad data or failed conversion

// Runs the `cstts` command line. `args` excludes the program name. Machine
// output goes to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cstts::cli
