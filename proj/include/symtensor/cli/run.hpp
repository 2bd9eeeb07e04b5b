#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace symtensor::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Environment variable holding the worker count for `count` (default 1).
inline constexpr const char* kThreadsEnv = "SYMTENSOR_THREADS";

// Runs one command line (without the program name). Returns the exit status:
// 0 on success, 1 on a library error or failed check, 2 on a parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symtensor::cli
