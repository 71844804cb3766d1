#pragma once

#include <iosfwd>

namespace tenv::cli {

/// Exit code of `verify` when a suite reports failures. Errors use their ErrorCode values.
constexpr int kExitSuiteFailure = 6;

/// Runs one command line. Output goes to `out` (or --out FILE), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tenv::cli
