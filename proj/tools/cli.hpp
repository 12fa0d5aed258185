#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgx::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternalFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kDomainFailure = 3;

/// Runs one command line (without the program name) and returns the exit
/// code. Normal output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgx::cli
