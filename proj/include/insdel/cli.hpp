#ifndef INSDEL_CLI_HPP
#define INSDEL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace insdel::cli {

enum ExitCode : int {
    ok = 0,
    negative = 1,  // mismatch, not found, invalid grammar
    usage = 2,     // bad arguments or unparsable input
    exhausted = 3, // a search ran out of its visited budget
};

/// Runs one command. `args` excludes the program name. Machine output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace insdel::cli

#endif  // INSDEL_CLI_HPP
