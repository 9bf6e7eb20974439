#ifndef HEDONICA_TOOLS_CLI_HPP
#define HEDONICA_TOOLS_CLI_HPP

#include <iosfwd>

namespace hedonica::cli {

/// Runs the command line. Exit codes: 0 success, 1 a size cap or
/// precondition failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hedonica::cli

#endif  // HEDONICA_TOOLS_CLI_HPP
