#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricalc::cli {

/// Exit codes of `execute`.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kMalformedInput = 2;
inline constexpr int kInternalError = 3;

/// Runs one command. `args` excludes the program name. A file argument of
/// "-" reads from `in`. Exactly one JSON document goes to `out` on success;
/// diagnostics go to `err`.
int execute(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

} // namespace toricalc::cli
