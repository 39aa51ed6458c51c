// driver.hpp - the CLI front door, callable in-process for tests
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chase {

/// Runs the `chase` command line: check / build / run subcommands.
/// args excludes the program name. Exit codes: 0 success, 1 compile
/// diagnostics, 2 usage or I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chase
