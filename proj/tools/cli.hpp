#pragma once

#include <ostream>

namespace schemoid::cli {

/// Runs the command line. Exit codes: 0 success, 1 a requested check failed
/// or a guard refused, 2 bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schemoid::cli
