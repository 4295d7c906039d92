#pragma once

#include <iosfwd>

namespace fock {

/// Full command-line entry point. Exit codes: 0 success, 1 verification gate
/// failure, 2 usage or input error, 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fock
