#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace lotto_edge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one lotto-edge command. args excludes the program name. Reports go
/// to out, diagnostics to err. Returns 0 on success, 1 on a domain error
/// (after printing "error: <ErrorName>: <message>"), 2 on a usage error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lotto_edge
