#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmp/world.hpp"

namespace hmp {

struct SkillParam {
  std::string name;
  EntityKind kind{};
  bool operator==(const SkillParam&) const = default;
};

// A predicate whose arguments are parameter names rather than entity ids.
using PredicateTemplate = Predicate;

// Symbolic counterpart of one natural-language effect line. May be empty
// when the line has no symbolic meaning (e.g. a pose nuance).
struct EffectTemplate {
  std::vector<PredicateTemplate> add;
  std::vector<PredicateTemplate> remove;
  bool operator==(const EffectTemplate&) const = default;
};

// One operator of the skill library. The natural-language and symbolic
// lists are index-aligned: preconditions_sym[i] is the meaning of
// preconditions_nl[i], effects_sym[i] the meaning of effects_nl[i].
struct SkillDescription {
  std::string name;
  std::string description;
  // Optional description template for grounded steps, with {param}
  // placeholders ("Pick up the {object} from the {surface}.").
  std::string step_description;
  std::vector<SkillParam> params;
  std::vector<std::string> preconditions_nl;
  std::vector<std::string> effects_nl;
  std::vector<PredicateTemplate> preconditions_sym;
  std::vector<EffectTemplate> effects_sym;
  // May contain {param} placeholders; the first one becomes the grounded
  // verification question.
  std::vector<std::string> example_questions;

  bool operator==(const SkillDescription&) const = default;
};

using Binding = std::map<std::string, std::string>;  // param -> entity id

struct GroundedStep {
  std::string skill_name;
  std::string description;
  std::string preconditions;
  std::string effects;
  std::string question;
  Binding binding;
  // Parameters the binding could not fill (only possible for steps parsed
  // from a model response); such a step has no symbolic form.
  std::vector<std::string> unbound;
  std::vector<Predicate> preconditions_sym;
  EffectDelta effects_sym;

  bool grounded() const { return unbound.empty(); }
  bool operator==(const GroundedStep&) const = default;
};

class SkillLibrary {
 public:
  SkillLibrary() = default;
  explicit SkillLibrary(std::vector<SkillDescription> skills);

  const std::vector<SkillDescription>& skills() const { return skills_; }
  const SkillDescription* find(std::string_view name) const;
  bool empty() const { return skills_.empty(); }
  std::size_t size() const { return skills_.size(); }

  bool operator==(const SkillLibrary&) const = default;

 private:
  std::vector<SkillDescription> skills_;
};

// Skill library file (JSON):
//   { "skills": [ { "name", "description", "step" (optional),
//                   "params": [{"name": "object", "kind": "object"}, ...],
//                   "preconditions": [nl...], "preconditions_sym": ["hand_empty", ...],
//                   "effects": [nl...], "effects_sym": [{"add": [...], "remove": [...]}, ...],
//                   "examples": ["Has the robot ... {object} ...?"] } ] }
// Throws ParseError (syntax, bad predicate text; carries the line) and
// SchemaError (missing fields, alignment, unknown template variables).
std::vector<SkillDescription> parse_skill_library(std::string_view source);
SkillLibrary load_skill_library(const std::string& path);
std::string serialize_skill_library(const std::vector<SkillDescription>& skills);

// Throws SchemaError.
void validate_skill(const SkillDescription& skill);

// Whether an entity of kind `entity` may fill a parameter of kind `param`.
// Surfaces are also locations.
bool kind_compatible(EntityKind param, EntityKind entity);

// Human-readable form of an entity id ("white_table" -> "white table").
std::string display_name(std::string_view id);

// Substitutes the binding into a natural-language line.
std::string ground_text(std::string_view text, const SkillDescription& skill, const Binding& binding);

// Throws BindingError.
GroundedStep ground(const SkillDescription& skill, const Binding& binding,
                    const std::map<std::string, EntityKind>& entities);

Predicate instantiate(const PredicateTemplate& t, const Binding& binding);
EffectDelta instantiate_effects(const SkillDescription& skill, const Binding& binding);

// Symbolic preconditions of the step that do not hold in `state`.
std::vector<Predicate> check_preconditions(const GroundedStep& step, const WorldState& state);

// True when every add predicate holds and no remove predicate holds.
bool effects_hold(const GroundedStep& step, const WorldState& state);

}  // namespace hmp
