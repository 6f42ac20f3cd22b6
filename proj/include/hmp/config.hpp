#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hmp/chat.hpp"
#include "hmp/monitor.hpp"
#include "hmp/orchestrator.hpp"

namespace hmp {

enum class BackendKind { oracle, remote, mock };
std::string_view to_string(BackendKind k);
BackendKind backend_kind_from_string(std::string_view text);  // throws ConfigError

struct PlannerConfig {
  BackendKind backend = BackendKind::oracle;
  int depth = kDefaultPlanDepth;
  std::optional<std::string> image;       // initial observation for the remote planner
  std::vector<std::string> mock_replies;  // canned replies (text or loaded from mock_reply_files)
  RemoteEndpoint remote;
};

struct MonitorSettings {
  BackendKind backend = BackendKind::oracle;
  MonitorConfig sampling;
  MonitorErrorModel errors;
  std::vector<std::string> mock_replies{"yes"};
  RemoteEndpoint remote;
};

struct OutputPaths {
  std::optional<std::string> log;     // JSONL
  std::optional<std::string> report;  // text
  std::optional<std::string> csv;
};

// One run of the pipeline. Relative paths are resolved against the config
// file's directory. The API key is never stored: endpoints name the
// environment variable that holds it.
struct RunConfig {
  std::string world_path;
  std::string skills_path;
  GoalSpec goal;
  PlannerConfig planner;
  MonitorSettings monitor;
  SkillExecutorModel executor;
  double timeout_s = 30.0;
  std::optional<std::uint64_t> seed;  // required before running
  std::size_t n = 1;
  unsigned threads = 0;
  OutputPaths out;

  nlohmann::json source;  // the parsed file, with flag overrides applied
};

// Config file:
// { "world": "worlds/bag_world.json", "skills": "../resources/skills/library.json",
//   "goal": {"text": "...", "sym": ["on(bag, white_table)"]},
//   "planner": {"backend": "oracle"|"remote"|"mock", "depth": 8, "image": "...",
//               "mock_reply_file": "...", "mock_replies": ["..."],
//               "remote": {"url", "model", "api_key_env", "timeout_s"}},
//   "monitor": {"backend": ..., "period_s": 1.0, "span_s": 1.5, "frames": [10, 15],
//               "false_complete_rate": 0, "false_inprogress_rate": 0,
//               "mock_replies": ["yes"], "remote": {...}},
//   "executor": {"default": {"success_prob", "duration_chunks", "failure_mode"},
//                "skills": {"pick": {...}}, "seed": 0},
//   "timeout_s": 30, "seed": 7, "n": 40, "threads": 0,
//   "out": {"log": "...", "report": "...", "csv": "..."} }
// Throws ConfigError.
RunConfig parse_run_config(const nlohmann::json& j, const std::string& base_dir);
RunConfig load_run_config(const std::string& path);

// SHA-256 of the canonical (sorted-key) JSON of the effective configuration.
std::string config_hash(const RunConfig& config);

std::unique_ptr<PlannerBackend> make_planner(const PlannerConfig& config);
std::unique_ptr<MonitorBackend> make_monitor(const MonitorSettings& config, std::uint64_t trial_seed);

// Loads the world and library and wires the backend factories.
// Throws ConfigError, IoError, ParseError, SchemaError.
TrialSetup make_trial_setup(const RunConfig& config);

}  // namespace hmp
