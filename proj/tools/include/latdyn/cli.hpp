#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latdyn::cli {

// Runs one subcommand.  `args` excludes the program name.  Output files go
// where --out says; "-" (the default) means `out`.  Diagnostics go to `err`
// as a single line.  Returns 0 on success, 1 on a validation error, 2 on a
// numerical or internal failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latdyn::cli
