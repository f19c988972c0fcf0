#ifndef FOLDRUN_CLI_HPP
#define FOLDRUN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace foldrun {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line. `args` excludes the program name. Exit codes:
/// 0 success, 1 a check failed (witness printed), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foldrun

#endif  // FOLDRUN_CLI_HPP
