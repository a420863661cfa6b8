#include "agentsim/gridquest.hpp"

#include <sstream>

#include "agentsim/errors.hpp"

namespace agentsim {

namespace {

const std::string kEnvId = "gridquest";

std::string cell_text(Cell c) {
  return std::to_string(c.x) + "," + std::to_string(c.y);
}

std::string cells_text(const std::set<Cell>& cells) {
  std::string out;
  for (const Cell& c : cells) {
    if (!out.empty()) out.push_back(';');
    out += cell_text(c);
  }
  return out;
}

ToolRegistry build_registry() {
  ToolRegistry registry;
  registry.register_tool(ToolSpec{
      "move",
      "Move one cell in the given direction. Blocked by walls and map "
      "edges; locked while an encounter is active. Moving may trigger a "
      "creature encounter.",
      {ParamSpec{"direction", ParamKind::Enum, true,
                 {"north", "south", "east", "west"}, {}, {}}},
  });
  registry.register_tool(ToolSpec{
      "look",
      "Re-inspect the current state of the grid without changing anything.",
      {},
      /*read_only=*/true,
  });
  registry.register_tool(ToolSpec{
      "capture",
      "Attempt to capture the creature in the active encounter. May fail, "
      "leaving the encounter active.",
      {},
  });
  registry.register_tool(ToolSpec{
      "flee",
      "Leave the active encounter without capturing. Always succeeds.",
      {},
  });
  return registry;
}

}  // namespace

void validate_grid_spec(const GridSpec& spec) {
  if (spec.width < 1 || spec.height < 1) {
    throw InvalidConfigError("grid dimensions must be positive");
  }
  if (spec.goal_captures < 1) {
    throw InvalidConfigError("goal_captures must be >= 1");
  }
  const Decimal zero;
  const Decimal one = Decimal::from_int(1);
  if (spec.encounter_probability < zero || spec.encounter_probability > one) {
    throw InvalidConfigError("encounter probability p must be in [0, 1]");
  }
  if (spec.capture_probability < zero || spec.capture_probability > one) {
    throw InvalidConfigError("capture probability q must be in [0, 1]");
  }
  if (spec.walls.count(Cell{0, 0}) != 0) {
    throw InvalidConfigError("start cell (0,0) must not be a wall");
  }
  auto in_bounds = [&](Cell c) {
    return c.x >= 0 && c.x < spec.width && c.y >= 0 && c.y < spec.height;
  };
  for (const Cell& c : spec.walls) {
    if (!in_bounds(c)) throw InvalidConfigError("wall outside the grid");
  }
  for (const Cell& c : spec.items) {
    if (!in_bounds(c)) throw InvalidConfigError("item outside the grid");
    if (spec.walls.count(c) != 0) {
      throw InvalidConfigError("item placed on a wall");
    }
  }
}

GridQuestEnv::GridQuestEnv(const GridSpec& spec, GoalSpec goal, RngSeed seed)
    : spec_(spec),
      goal_(std::move(goal)),
      registry_(build_registry()),
      rng_(seed),
      items_left_(spec.items) {}

const std::string& GridQuestEnv::env_id() const { return kEnvId; }

std::string GridQuestEnv::rules() const {
  std::ostringstream out;
  out << "You control a character on a " << spec_.width << "x" << spec_.height
      << " grid, starting at (0,0). Coordinates are (x,y) with x growing "
         "east and y growing south. Cells listed as walls are impassable. "
         "Stepping onto an item cell always starts a creature encounter; "
         "any other successful move starts one with probability "
      << spec_.encounter_probability.to_string()
      << ". While an encounter is active you must capture or flee before "
         "moving. A capture attempt succeeds with probability "
      << spec_.capture_probability.to_string()
      << "; fleeing always works and keeps the creature uncaptured.";
  return out.str();
}

Observation GridQuestEnv::observe() const {
  Observation obs;
  obs.turn = turn_;
  obs.summary = summary_text();
  obs.variables.emplace("position", ScalarValue::text(cell_text(position_)));
  obs.variables.emplace("captures", ScalarValue::integer(captures_));
  obs.variables.emplace("goal_captures",
                        ScalarValue::integer(spec_.goal_captures));
  obs.variables.emplace("encounter",
                        ScalarValue::text(encounter_ ? *encounter_ : "none"));
  obs.variables.emplace("items", ScalarValue::text(cells_text(items_left_)));
  obs.variables.emplace("walls", ScalarValue::text(cells_text(spec_.walls)));
  obs.variables.emplace("width", ScalarValue::integer(spec_.width));
  obs.variables.emplace("height", ScalarValue::integer(spec_.height));
  obs.variables.emplace("score", ScalarValue::integer(captures_));
  obs.pending_events = pending_events_;
  return obs;
}

ScalarValue GridQuestEnv::read_variable(const std::string& key) const {
  Observation obs = observe();
  auto it = obs.variables.find(key);
  if (it == obs.variables.end()) {
    throw KeyNotFoundError("gridquest exposes no variable '" + key + "'");
  }
  return it->second;
}

std::string GridQuestEnv::summary_text() const {
  std::ostringstream out;
  out << "Turn " << turn_ << ". Position (" << position_.x << ","
      << position_.y << ") on a " << spec_.width << "x" << spec_.height
      << " grid. Captures: " << captures_ << "/" << spec_.goal_captures
      << ". Encounter: " << (encounter_ ? *encounter_ : "none")
      << ". Items remaining: " << items_left_.size() << ".";
  return out.str();
}

TransitionResult GridQuestEnv::apply(const ValidatedCall& call) {
  if (!terminal().running()) return TransitionResult::terminal();
  if (call.tool == "move") return do_move(call);
  if (call.tool == "look") {
    return TransitionResult::okay_with(ScalarValue::text(summary_text()));
  }
  if (call.tool == "capture") return do_capture();
  if (call.tool == "flee") return do_flee();
  return TransitionResult::invalid("tool '" + call.tool +
                                   "' is not part of this environment");
}

TransitionResult GridQuestEnv::do_move(const ValidatedCall& call) {
  if (encounter_) {
    return TransitionResult::invalid(
        "movement is locked while an encounter is active");
  }
  const std::string& direction = call.args.at("direction").as_text();
  Cell target = position_;
  if (direction == "north") {
    --target.y;
  } else if (direction == "south") {
    ++target.y;
  } else if (direction == "east") {
    ++target.x;
  } else {
    --target.x;
  }
  if (target.x < 0 || target.x >= spec_.width || target.y < 0 ||
      target.y >= spec_.height) {
    return TransitionResult::invalid("move " + direction + " leaves the grid");
  }
  if (spec_.walls.count(target) != 0) {
    return TransitionResult::invalid("cell " + cell_text(target) +
                                     " is a wall");
  }

  TransitionResult result;
  position_ = target;

  // RNG schedule: exactly one uniform per successful move onto a
  // non-item cell; item cells force the encounter without a draw.
  bool encounter_now = false;
  if (items_left_.count(target) != 0) {
    encounter_now = true;
  } else {
    encounter_now = rng_.bernoulli(spec_.encounter_probability.to_double());
  }
  if (encounter_now) {
    ++encounter_seq_;
    encounter_ = "creature-" + std::to_string(encounter_seq_);
    emit(EventKind::EncounterAppeared,
         {{"creature", ScalarValue::text(*encounter_)},
          {"cell", ScalarValue::text(cell_text(target))}},
         result.events);
  }
  result.value = ScalarValue::text("moved " + direction + " to " +
                                   cell_text(target));
  return result;
}

TransitionResult GridQuestEnv::do_capture() {
  if (!encounter_) {
    return TransitionResult::invalid("no active encounter to capture");
  }
  TransitionResult result;
  const std::string creature = *encounter_;
  if (rng_.bernoulli(spec_.capture_probability.to_double())) {
    ++captures_;
    encounter_.reset();
    items_left_.erase(position_);
    emit(EventKind::GoalProgress,
         {{"creature", ScalarValue::text(creature)},
          {"captures", ScalarValue::integer(captures_)}},
         result.events);
    result.value = ScalarValue::text("captured " + creature);
  } else {
    emit(EventKind::Info,
         {{"note", ScalarValue::text("escaped attempt")},
          {"creature", ScalarValue::text(creature)}},
         result.events);
    result.value = ScalarValue::text(creature + " evaded the attempt");
  }
  return result;
}

TransitionResult GridQuestEnv::do_flee() {
  if (!encounter_) {
    return TransitionResult::invalid("no active encounter to flee from");
  }
  TransitionResult result;
  const std::string creature = *encounter_;
  encounter_.reset();
  emit(EventKind::Info,
       {{"note", ScalarValue::text("fled")},
        {"creature", ScalarValue::text(creature)}},
       result.events);
  result.value = ScalarValue::text("fled from " + creature);
  return result;
}

std::vector<EventRecord> GridQuestEnv::end_turn() {
  finish_turn();
  return {};  // nothing advances between turns on the grid
}

TerminalStatus GridQuestEnv::terminal() const {
  if (captures_ >= spec_.goal_captures) return TerminalStatus::make_success();
  // Provably unreachable goals fail fast: captures can never succeed, or
  // no encounter source remains.
  if (spec_.capture_probability.is_zero()) {
    return TerminalStatus::make_failure(FailureReason::GoalImpossible);
  }
  if (spec_.encounter_probability.is_zero() && !encounter_ &&
      captures_ + static_cast<int>(items_left_.size()) < spec_.goal_captures) {
    return TerminalStatus::make_failure(FailureReason::GoalImpossible);
  }
  if (turn_ >= goal_.budget.max_turns) {
    return TerminalStatus::make_failure(FailureReason::BudgetExhausted);
  }
  return TerminalStatus::make_running();
}

std::string GridQuestEnv::canonical_state() const {
  std::ostringstream out;
  out << "captures=" << captures_ << "\n"
      << "encounter=" << (encounter_ ? *encounter_ : "none") << "\n"
      << "encounter_seq=" << encounter_seq_ << "\n"
      << "env=" << kEnvId << "\n"
      << "items=" << cells_text(items_left_) << "\n"
      << "position=" << cell_text(position_) << "\n"
      << "turn=" << turn_ << "\n";
  return out.str();
}

GridQuestFactory::GridQuestFactory(GridSpec spec, SimulationBudget budget)
    : spec_(std::move(spec)) {
  validate_grid_spec(spec_);
  validate_budget(budget);
  goal_.description = "Capture " + std::to_string(spec_.goal_captures) +
                      " creatures within " + std::to_string(budget.max_turns) +
                      " turns.";
  goal_.success_predicate_id = "captures_at_least_k";
  goal_.budget = budget;
}

const std::string& GridQuestFactory::env_id() const { return kEnvId; }

std::unique_ptr<Environment> GridQuestFactory::create(RngSeed seed) const {
  return std::make_unique<GridQuestEnv>(spec_, goal_, seed);
}

std::string GridQuestFactory::canonical_config() const {
  std::ostringstream out;
  out << "env=" << kEnvId << "\n"
      << "height=" << spec_.height << "\n"
      << "items=" << cells_text(spec_.items) << "\n"
      << "k=" << spec_.goal_captures << "\n"
      << "max_turns=" << goal_.budget.max_turns << "\n"
      << "p=" << spec_.encounter_probability.to_string() << "\n"
      << "q=" << spec_.capture_probability.to_string() << "\n"
      << "walls=" << cells_text(spec_.walls) << "\n"
      << "width=" << spec_.width << "\n";
  return out.str();
}

ordered_json GridQuestFactory::config_json() const {
  ordered_json walls = ordered_json::array();
  for (const Cell& c : spec_.walls) walls.push_back(cell_text(c));
  ordered_json items = ordered_json::array();
  for (const Cell& c : spec_.items) items.push_back(cell_text(c));
  return ordered_json{
      {"kind", kEnvId},
      {"width", spec_.width},
      {"height", spec_.height},
      {"walls", walls},
      {"items", items},
      {"p", spec_.encounter_probability.to_string()},
      {"q", spec_.capture_probability.to_string()},
      {"k", spec_.goal_captures},
      {"max_turns", goal_.budget.max_turns},
  };
}

}  // namespace agentsim
