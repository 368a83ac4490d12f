#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace toricarc {

/// Reduction budget: the --budget flag wins over TORICARC_BUDGET, which wins
/// over the default. Throws ParseError on a malformed environment value.
std::size_t resolve_budget(std::optional<std::size_t> flag, const char* env_value);

/// Runs the command line (without the program name). Returns the exit status:
/// 0 success, 1 verification failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricarc
