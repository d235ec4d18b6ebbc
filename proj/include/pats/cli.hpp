#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pats::cli {

enum ExitCode { kOk = 0, kFalse = 1, kUsage = 2 };

/// Runs one `pats` invocation. `args` excludes the program name. Results go
/// to `out` as key=value lines, diagnostics to `err`; "-" as a file name
/// means `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pats::cli
