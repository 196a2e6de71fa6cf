#pragma once

#include <cstdint>
#include <string>

namespace gtwist::cli {

// Exit codes shared by all subcommands so CI can tell verdicts from failures:
// 0 success (verdict in the payload), 1 usage, 2 parse error,
// 3 precondition / realizability / generation / IO failure,
// 4 cross-validation disagreement.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitDisagreement = 4;

int run(int argc, const char* const* argv);

// FNV-1a 64-bit digest, used to fingerprint inputs in reports.
std::uint64_t fnv1a64(const std::string& data);

}  // namespace gtwist::cli
