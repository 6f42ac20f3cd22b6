#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace hmp {

inline constexpr std::int64_t kTicksPerSecond = 25;

inline double ticks_to_seconds(std::int64_t ticks) {
  return static_cast<double>(ticks) / static_cast<double>(kTicksPerSecond);
}

enum class EntityKind { object, surface, location };

std::string_view to_string(EntityKind kind);
EntityKind entity_kind_from_string(std::string_view text);

enum class PredicateName { hand_empty, holding, on, clear, reachable, graspable, pushable, at };

std::string_view to_string(PredicateName name);
std::optional<PredicateName> predicate_name_from_string(std::string_view text);
std::size_t arity(PredicateName name);

struct Predicate {
  PredicateName name{};
  std::vector<std::string> args;

  auto operator<=>(const Predicate&) const = default;
  bool operator==(const Predicate&) const = default;
};

// "on(bag, box)", "hand_empty". Throws SchemaError on unknown names or a
// wrong argument count.
Predicate parse_predicate(std::string_view text);
std::string to_string(const Predicate& p);

using Vec3 = std::array<double, 3>;

struct EffectDelta {
  std::set<Predicate> add;
  std::set<Predicate> remove;

  bool empty() const { return add.empty() && remove.empty(); }
  bool operator==(const EffectDelta&) const = default;
};

// Ground-truth symbolic world.
//
// hand_empty is stored but always recomputed from the holding facts. clear(x)
// is never stored: it is evaluated from occupancy (no on(_, x) and no
// at(_, x)), so skills that move things never have to maintain it.
struct WorldState {
  std::map<std::string, EntityKind> entities;
  std::set<Predicate> facts;
  std::map<std::string, Vec3> poses;
  std::int64_t clock = 0;

  bool has_entity(const std::string& id) const { return entities.count(id) != 0; }
  std::optional<EntityKind> kind_of(const std::string& id) const;

  bool operator==(const WorldState&) const = default;
};

// Builds a state from declared entities and facts. Declared clear() facts are
// checked against occupancy and then dropped; hand_empty is recomputed.
// Throws UnknownEntity / InvariantViolation.
WorldState make_world(std::map<std::string, EntityKind> entities,
                      const std::vector<Predicate>& facts,
                      std::map<std::string, Vec3> poses = {});

// Throws InvariantViolation if the mutual-exclusion or hand invariants fail.
void check_invariants(const WorldState& state);

WorldState apply_effects(const WorldState& state, const EffectDelta& delta);
bool holds(const WorldState& state, const Predicate& p);
WorldState advance_clock(const WorldState& state, std::int64_t ticks);

// Facts plus the evaluated clear() predicates, sorted. Used for display and
// for the monitor's text rendering of snapshots.
std::vector<Predicate> visible_facts(const WorldState& state);

// World file schema:
//   { "entities": [{"id": "bag", "kind": "object"}, ...],
//     "facts":    ["on(bag, box)", "hand_empty", ...],
//     "poses":    {"bag": [x, y, z]},          (optional, meters)
//     "clock":    0 }                          (optional, ticks)
WorldState world_from_json(const nlohmann::json& j);
nlohmann::json world_to_json(const WorldState& state);
WorldState load_world(const std::string& path);

}  // namespace hmp
