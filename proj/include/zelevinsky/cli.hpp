#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zelevinsky::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kSemanticError = 2,
    kUndecided = 3,
    kInternalError = 4,
};

/// Runs one invocation of the `zelev` tool. `args` excludes the program name.
/// Input is the positional text, `--file`, or `in`, in that order of preference.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zelevinsky::cli
