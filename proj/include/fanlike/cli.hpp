#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanlike::cli {

/// Runs one command line (args[0] is the first subcommand or flag, not the
/// program name). Returns 0 when every check passes or a result was produced,
/// 1 when a checked property fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

/// argv adapter; colors PASS/FAIL when stdout is a terminal and NO_COLOR is unset.
int main_entry(int argc, char** argv);

}  // namespace fanlike::cli
