#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hpa {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int input_error = 64;
inline constexpr int budget_exceeded = 75;
}  // namespace exit_code

/// Runs one command; args exclude the program name.  The report goes to
/// out, diagnostics to err.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpa
