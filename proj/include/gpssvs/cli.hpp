#pragma once

namespace gpssvs::cli {

/// Runs the command line and returns the process exit code:
/// 0 success, 1 I/O failure, 2 usage error, 3 convergence / annihilated /
/// truncation, 4 verification failure or route disagreement.
int run(int argc, const char* const* argv);

}  // namespace gpssvs::cli
