#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hqc::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBreach = 1;
inline constexpr int kNotSymplectic = 2;
inline constexpr int kQuadrature = 3;
inline constexpr int kBadCurve = 4;
inline constexpr int kUsage = 5;

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqc::cli
