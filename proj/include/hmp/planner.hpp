#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hmp/chat.hpp"
#include "hmp/skills.hpp"
#include "hmp/world.hpp"

namespace hmp {

struct GoalSpec {
  std::string text;
  std::vector<Predicate> sym;
};

bool goal_satisfied(const WorldState& state, const GoalSpec& goal);

struct Plan {
  std::vector<GroundedStep> steps;
  GoalSpec goal;
};

// What the planner sees: the goal, the initial observation (a world snapshot
// and, when a camera is present, an image) and the skill library.
struct PlannerRequest {
  GoalSpec goal;
  const WorldState* snapshot = nullptr;
  std::optional<std::string> image_path;
  const SkillLibrary* library = nullptr;
};

struct PlannerPrompt {
  std::string system;
  std::string user;
};

inline constexpr int kDefaultPlanDepth = 8;

// Every applicable grounding of every skill in `state`, ordered by skill
// name, then by the binding tuple in parameter order.
std::vector<GroundedStep> applicable_steps(const WorldState& state, const SkillLibrary& library);

// Shortest plan by breadth-first search over grounded skill applications.
// Throws Unsatisfiable (carrying the deepest frontier reached) when no plan
// of length <= max_depth exists.
Plan plan_oracle(const WorldState& state, const GoalSpec& goal, const SkillLibrary& library,
                 int max_depth = kDefaultPlanDepth);

// The fixed planning system prompt, byte-identical to
// resources/prompts/system_prompt.txt.
const std::string& planner_system_prompt();

// Renders the library in the task-prompt layout:
//   Task: / Available Skills: / "Generate the plan as a JSON list:".
std::string render_task_prompt(const std::string& goal_text, const SkillLibrary& library);
PlannerPrompt build_planner_prompt(const PlannerRequest& request);

// Finds the first list of step objects in a model reply. Accepts JSON and
// the Python-literal form models often produce (SkillDescription(name='pick',
// ...), single-quoted strings), and ignores surrounding prose or code fences.
// Throws MalformedResponse when no list parses.
nlohmann::json extract_step_list(std::string_view raw);

// Throws MalformedResponse, UnknownSkill, PlanSchemaError.
Plan parse_plan_response(std::string_view raw, const SkillLibrary& library,
                         const std::map<std::string, EntityKind>& entities);

// Entity ids mentioned in `text`, in order of appearance. Matching is on
// whole words, case-insensitive, against the id and its display name; at a
// position the longest matching entity wins.
std::vector<std::string> entity_mentions(std::string_view text, const std::map<std::string, EntityKind>& entities);

// The plan in the five-key wire format, keys in schema order.
nlohmann::ordered_json plan_to_json(const Plan& plan);

struct ValidationReport {
  bool steps_valid = true;
  std::optional<std::size_t> failed_step;  // 0-based
  std::vector<Predicate> unmet;
  std::vector<std::string> unbound;
  bool goal_satisfied = false;
  WorldState final_state;

  bool ok() const { return steps_valid && goal_satisfied; }
};

ValidationReport validate_plan(const Plan& plan, const WorldState& state, const GoalSpec& goal);

class PlannerBackend {
 public:
  virtual ~PlannerBackend() = default;
  // Throws PlannerError (or TransportError for remote backends).
  virtual Plan plan(const WorldState& state, const GoalSpec& goal, const SkillLibrary& library) = 0;
  virtual std::string name() const = 0;
};

class OraclePlanner : public PlannerBackend {
 public:
  explicit OraclePlanner(int max_depth = kDefaultPlanDepth) : max_depth_(max_depth) {}
  Plan plan(const WorldState& state, const GoalSpec& goal, const SkillLibrary& library) override;
  std::string name() const override { return "oracle"; }

 private:
  int max_depth_;
};

// Prompts a chat model and parses its reply. A transport failure is retried
// once before it propagates.
class VlmPlanner : public PlannerBackend {
 public:
  VlmPlanner(std::shared_ptr<ChatClient> client, std::string label, std::optional<std::string> image_path = {})
      : client_(std::move(client)), label_(std::move(label)), image_path_(std::move(image_path)) {}
  Plan plan(const WorldState& state, const GoalSpec& goal, const SkillLibrary& library) override;
  std::string name() const override { return label_; }

 private:
  std::shared_ptr<ChatClient> client_;
  std::string label_;
  std::optional<std::string> image_path_;
};

GoalSpec goal_from_json(const nlohmann::json& j);
nlohmann::json goal_to_json(const GoalSpec& goal);

}  // namespace hmp
