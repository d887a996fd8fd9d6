#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dltk::tools {

struct VerifyOptions {
  long long sss_cap = 100000;    // braid::kDefaultSssCap
  long long flag_cap = 1000000;  // dlpoints::kDefaultFlagCap
};

std::vector<std::string> verify_suite_names();

// Runs the named suites (all of them when `suites` is empty), printing one
// ok/FAIL line per check.  Returns the number of failed checks.  Unknown
// suite names throw std::invalid_argument.
int run_verify(const std::vector<std::string>& suites,
               const VerifyOptions& options, std::ostream& out);

}  // namespace dltk::tools
