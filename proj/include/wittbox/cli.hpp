#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittbox {

// Exit statuses of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_assertion = 1,
    exit_invalid = 2,
    exit_budget = 3,
};

// Runs one command (args exclude the program name). Reports go to `out` as
// key=value lines; failures print `error.kind=...` to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittbox
