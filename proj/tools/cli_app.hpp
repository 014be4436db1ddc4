// cli_app.hpp
//
// Command-line driver. Exit status: 0 success, 1 usage or domain error,
// 2 when some checked inequality fails.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsl::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsl::cli
