#pragma once

// Command-line front end. run_cli is the whole program minus process setup,
// so tests can drive it with captured streams.

#include <iosfwd>

namespace hilbert::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapacity = 2,
  kMismatch = 3,
  kDataShortage = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hilbert::cli
