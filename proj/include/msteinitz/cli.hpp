#ifndef MSTEINITZ_CLI_HPP
#define MSTEINITZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace msteinitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitBudget = 2;

/// Subcommands: gen, rearrange, signs, oracle, verify, bench. Errors are
/// written to `err` as one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msteinitz::cli

#endif  // MSTEINITZ_CLI_HPP
