#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liking::cli {

/// Dispatches a subcommand and writes the report to `out` (warnings and
/// errors to `err`). Returns the process exit code: 0 when the checked
/// property holds or the command succeeded, 1 when a property fails (the
/// witness is in the report), 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liking::cli
