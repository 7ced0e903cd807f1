#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arsss::cli {

/// Runs one subcommand. Returns 0 on success, 2 on usage errors and 1 on
/// domain errors, which are reported on `err` as "error: <CODE>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arsss::cli
