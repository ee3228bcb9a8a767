#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "linkirr/search.hpp"
#include "linkirr/verification.hpp"

namespace linkirr::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "linkirr";
inline constexpr std::string_view kVersion = "0.1.0";

/// Environment variable naming the default witness library directory.
inline constexpr const char* kLibraryEnv = "LINKIRR_LIBRARY";

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitUsage = 2,
};

/// FNV-1a 64-bit, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

/// Payload encodings. Field order is fixed; SearchReport omits elapsed time
/// so that replays with the same seed serialize identically.
Json to_json(const SearchReport& r);
Json to_json(const Certificate& c);
Json to_json(const BoundReport& b);

/// Runs one command line (without the program name). Records go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkirr::cli
