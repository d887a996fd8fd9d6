#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dltk::tools {

// Full CLI entry point; `args` excludes the program name.  Returns the
// process exit code: 0 success, 1 domain or usage error, 2 verification
// failure.  Normal output goes to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace dltk::tools
