#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invsys::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kNotBinomial = 3,
  kMismatch = 4,
  kNotArtinian = 5,
};

// Runs the command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invsys::cli
