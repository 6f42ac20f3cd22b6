#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hmp/monitor.hpp"
#include "hmp/planner.hpp"

namespace hmp {

inline constexpr std::int64_t kChunkTicks = 50;  // 50 joint targets at 25 Hz
inline constexpr int kTrialSchemaVersion = 1;

enum class FailureMode { stall, wrong_effect };
std::string_view to_string(FailureMode m);
FailureMode failure_mode_from_string(std::string_view text);

struct SkillExecutorParams {
  double success_prob = 1.0;
  std::int64_t duration_chunks = 1;
  FailureMode failure_mode = FailureMode::stall;
};

// Stochastic stand-in for the learned skill policies. A successful run
// applies the step's effects when its last chunk ends; a stalled run never
// changes the world; a wrong_effect run applies only the removals.
struct SkillExecutorModel {
  SkillExecutorParams defaults;
  std::map<std::string, SkillExecutorParams> per_skill;
  std::uint64_t seed = 0;

  const SkillExecutorParams& params(const std::string& skill) const;
  void validate() const;  // throws ConfigError
};

enum class FailureCategory { none, planner, monitor, skill_policy };
std::string_view to_string(FailureCategory c);
FailureCategory failure_category_from_string(std::string_view text);

enum class StepResult {
  completed,           // monitor said completed and the effects hold
  premature,           // monitor said completed before the effects held
  precondition_unmet,  // ground truth did not allow the step to start
  unbound,             // the plan left a parameter unbound
  timeout,             // no completed verdict within the timeout
};
std::string_view to_string(StepResult r);
StepResult step_result_from_string(std::string_view text);

struct VerdictRecord {
  std::int64_t tick = 0;
  VerdictStatus status = VerdictStatus::in_progress;
  bool flipped = false;
  std::string note;
  bool operator==(const VerdictRecord&) const = default;
};

struct StepRecord {
  std::string skill;
  Binding binding;
  std::int64_t start_tick = 0;
  std::int64_t end_tick = 0;
  bool executor_success = false;           // the executor's draw
  std::optional<std::int64_t> effect_tick;  // when the executor changed the world
  std::vector<std::int64_t> chunk_ticks;    // chunk boundaries reached while the step ran
  std::vector<VerdictRecord> verdicts;
  std::vector<std::string> unmet;  // preconditions or unbound parameters
  bool effects_held_at_end = false;
  StepResult result = StepResult::timeout;
  bool operator==(const StepRecord&) const = default;
};

struct TrialRecord {
  std::uint64_t trial_id = 0;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string planner;
  std::string monitor;
  std::optional<nlohmann::ordered_json> plan;  // five-key wire format
  std::optional<std::string> plan_error;
  std::vector<StepRecord> steps;
  bool success = false;
  FailureCategory failure_category = FailureCategory::none;
  std::int64_t end_tick = 0;
  bool operator==(const TrialRecord&) const = default;
};

// Earliest cause, in simulation time: a planner error, else the first step
// that went wrong. A premature transition or a timeout whose effects had in
// fact held is the monitor's; a timeout with unmet effects is the skill
// policy's; a step that cannot start without an earlier premature transition,
// or a completed plan that misses the goal, is the planner's.
FailureCategory attribute_failure(const TrialRecord& record);

struct TrialOptions {
  MonitorConfig monitor;
  double timeout_s = 30.0;
};

// Plans, then executes the plan step by step on the simulation clock,
// polling the monitor once per period. Runtime failures are recorded, never
// thrown; only invalid options raise ConfigError.
TrialRecord run_trial(const WorldState& world, const GoalSpec& goal, const SkillLibrary& library,
                      PlannerBackend& planner, MonitorBackend& monitor, const SkillExecutorModel& executor,
                      const TrialOptions& options, std::uint64_t trial_seed = 0);

// Everything a batch needs; backends are created per trial so trials share
// no state and can run in parallel.
struct TrialSetup {
  WorldState world;
  GoalSpec goal;
  SkillLibrary library;
  std::function<std::unique_ptr<PlannerBackend>(std::uint64_t trial_seed)> make_planner;
  std::function<std::unique_ptr<MonitorBackend>(std::uint64_t trial_seed)> make_monitor;
  SkillExecutorModel executor;
  TrialOptions options;
  std::string config_hash;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct BatchStats {
  std::size_t n_trials = 0;
  std::size_t n_success = 0;
  double success_rate = 0.0;
  std::map<FailureCategory, std::size_t> failures;  // all four categories present
  struct SkillStats {
    std::size_t attempts = 0;
    std::size_t successes = 0;
  };
  std::map<std::string, SkillStats> per_skill;
  double ci_low = 0.0;  // 95% Wilson interval of success_rate
  double ci_high = 0.0;
};

// Trial i uses seed mix_seed(seed, i). Records come back in trial order.
std::vector<TrialRecord> run_trials(const TrialSetup& setup, std::size_t n, std::uint64_t seed);
BatchStats compute_stats(const std::vector<TrialRecord>& records);
// Runs the trials, writes the JSONL log when `log_path` is given, returns
// the statistics. Throws std::invalid_argument for n == 0.
BatchStats run_batch(const TrialSetup& setup, std::size_t n, std::uint64_t seed,
                     const std::optional<std::string>& log_path = {});

// Wilson score interval.
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t n, double z = 1.959963984540054);
// Central binomial acceptance region [lo, hi] (counts) for Bin(n, p): the
// largest lo with P(X < lo) <= alpha/2 and smallest hi with P(X > hi) <= alpha/2.
std::pair<std::size_t, std::size_t> binomial_acceptance(std::size_t n, double p, double alpha = 0.05);

nlohmann::ordered_json trial_to_json(const TrialRecord& record);
TrialRecord trial_from_json(const nlohmann::ordered_json& j);
std::string trials_to_jsonl(const std::vector<TrialRecord>& records);
// Throws ParseError with the line number.
std::vector<TrialRecord> trials_from_jsonl(std::string_view text);

// Table of per-skill and full-task rates with the failure breakdown.
std::string format_report_text(const BatchStats& stats);
std::string format_report_csv(const BatchStats& stats);

}  // namespace hmp
