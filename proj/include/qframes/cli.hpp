#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qframes::cli {

/// Exit codes: all requested certificates pass / a certificate fails / usage or IO error.
enum ExitCode : int { kPass = 0, kCertificateFailure = 1, kUsageError = 2 };

/// Run the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qframes::cli
