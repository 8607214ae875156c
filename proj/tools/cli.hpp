#ifndef NINF_TOOLS_CLI_HPP
#define NINF_TOOLS_CLI_HPP

#include "ninf/conat.hpp"
#include "ninf/search.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ninf::cli {

enum class Output { Text, Json };

struct Config {
  /// Step budget in generator evaluations for the whole command.
  std::uint64_t fuel = 10'000'000;
  /// Witness bits shown.
  std::uint64_t prefix_len = 16;
  Output output = Output::Text;
};

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kFuel = 3 };

struct Witness {
  std::string prefix;
  Classification classification;
};

struct Report {
  std::string query;
  /// "holds", "counterexample", "found" or "none".
  std::string verdict;
  std::optional<Witness> witness;
  SearchStats stats;
};

struct CommandResult {
  int exit_code = kOk;
  std::optional<Report> report;
  std::string error;
};

CommandResult cmd_forall(std::string_view expr_text, const Config& config);
/// Looks for a point where the predicate is false.
CommandResult cmd_find(std::string_view expr_text, const Config& config);
/// Reports the selected point epsilon(q) and its classification, whatever
/// the verdict.
CommandResult cmd_classify(std::string_view expr_text, const Config& config);
CommandResult cmd_decide_sum(std::string_view builtin_name, const Config& config);

nlohmann::ordered_json to_json(const Report& report);
std::string to_text(const Report& report);

/// Full command line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ninf::cli

#endif // NINF_TOOLS_CLI_HPP
