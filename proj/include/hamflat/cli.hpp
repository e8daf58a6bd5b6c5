#ifndef HAMFLAT_CLI_HPP
#define HAMFLAT_CLI_HPP

#include <iosfwd>

namespace hamflat {

// Full command-line surface. Exit codes: 0 all checks passed, 1 checks
// failed, 2 input or parse error. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hamflat

#endif
