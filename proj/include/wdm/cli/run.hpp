#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdm::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kSchema = 2, kPrecision = 3 };

// args excludes the program name. The JSON report goes to out; --pretty
// writes a short summary to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdm::cli
