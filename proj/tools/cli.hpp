#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncmot::cli {

enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kMalformed = 2,
  kUnsupported = 3,
  kCapExceeded = 4,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out` or the --out path; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncmot::cli
