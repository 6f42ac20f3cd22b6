#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>

namespace hmp {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitPlanner = 2,    // Unsatisfiable, malformed or off-library plans
  kExitConfig = 3,     // bad config, schema or input data
  kExitIo = 4,         // unreadable or unwritable files
  kExitTransport = 5,  // remote endpoint failures
};

int exit_code_for(const std::exception& e);

struct CliOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::optional<std::string> backend;  // planner backend
  std::optional<std::string> out;
};

// Each command prints its result to `out`, diagnostics to `err`, and returns
// an exit code; errors never escape.
int cmd_plan(const std::string& config_path, const CliOverrides& o, std::ostream& out, std::ostream& err);
int cmd_run(const std::string& config_path, const CliOverrides& o, std::ostream& out, std::ostream& err);
int cmd_report(const std::string& log_path, const CliOverrides& o, std::ostream& out, std::ostream& err);

struct RetargetArgs {
  std::string pose_path;
  std::string robot_path;
  std::string mapping_path;
  std::optional<std::string> reference_path;
};
int cmd_retarget(const RetargetArgs& a, const CliOverrides& o, std::ostream& out, std::ostream& err);

struct RewardArgs {
  std::string goal_path;
  std::string snapshot_path;
  std::optional<std::string> weights_path;
};
int cmd_reward(const RewardArgs& a, const CliOverrides& o, std::ostream& out, std::ostream& err);

}  // namespace hmp
