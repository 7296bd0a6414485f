#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qf::cli {

// Exit codes: 0 success (including clean failure reports), 1 verification
// failures, 2 usage or I/O errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qf::cli
