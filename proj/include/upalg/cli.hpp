#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "upalg/core.hpp"

namespace upalg {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitPass = 0,
  kExitFailure = 1,  // a mathematical check failed; witness printed
  kExitUsage = 2,    // bad arguments, unreadable or malformed input
};

/// Runs one command.  `args` excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

/// Hasse diagram of the UP-ordering as a DOT digraph: one node per element
/// and an edge x -> y for every cover x < y, drawn bottom to top so the
/// constant sits at the top.
std::string export_dot(UpAlgebra const& alg);

}  // namespace upalg
