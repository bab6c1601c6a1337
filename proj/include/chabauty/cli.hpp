#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chabauty::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chabauty::cli
