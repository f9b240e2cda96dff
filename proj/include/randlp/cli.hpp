#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace randlp {

/// Entry point of the `randlp` tool. Subcommands: gen, validate, render,
/// bench. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace randlp
