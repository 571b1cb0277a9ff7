// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recur::cli {

enum ExitCode : int {
	exit_ok = 0,
	exit_input_error = 1,
	exit_fallback = 2,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and messages to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace recur::cli
