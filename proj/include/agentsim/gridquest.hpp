#pragma once

#include <optional>
#include <set>
#include <string>

#include "agentsim/env.hpp"
#include "agentsim/tools.hpp"

namespace agentsim {

struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Grid collect-quest configuration. Movement over a bounded grid with
/// walls; stepping onto an item cell always triggers an encounter, any
/// other successful move triggers one with probability p; captures
/// succeed with probability q; the goal is K captures within the budget.
struct GridSpec {
  int width = 5;
  int height = 5;
  std::set<Cell> walls;
  std::set<Cell> items;
  Decimal encounter_probability;  // p in [0, 1]
  Decimal capture_probability;    // q in [0, 1]
  int goal_captures = 1;          // K
};

class GridQuestEnv final : public EnvironmentBase {
 public:
  GridQuestEnv(const GridSpec& spec, GoalSpec goal, RngSeed seed);

  const std::string& env_id() const override;
  const GoalSpec& goal() const override { return goal_; }
  const ToolRegistry& registry() const override { return registry_; }
  std::string rules() const override;
  Observation observe() const override;
  ScalarValue read_variable(const std::string& key) const override;
  TransitionResult apply(const ValidatedCall& call) override;
  std::vector<EventRecord> end_turn() override;
  TerminalStatus terminal() const override;
  std::string canonical_state() const override;

  // Test access.
  Cell position() const { return position_; }
  int captures() const { return captures_; }
  const std::optional<std::string>& active_encounter() const {
    return encounter_;
  }

 private:
  TransitionResult do_move(const ValidatedCall& call);
  TransitionResult do_capture();
  TransitionResult do_flee();
  std::string summary_text() const;

  GridSpec spec_;
  GoalSpec goal_;
  ToolRegistry registry_;
  SplitMix64 rng_;
  Cell position_{0, 0};
  int captures_ = 0;
  std::optional<std::string> encounter_;
  int encounter_seq_ = 0;
  std::set<Cell> items_left_;
};

class GridQuestFactory final : public EnvironmentFactory {
 public:
  /// Throws InvalidConfigError when the spec or budget is malformed.
  GridQuestFactory(GridSpec spec, SimulationBudget budget);

  const std::string& env_id() const override;
  std::unique_ptr<Environment> create(RngSeed seed) const override;
  std::string canonical_config() const override;
  ordered_json config_json() const override;

  const GridSpec& spec() const { return spec_; }
  const GoalSpec& goal() const { return goal_; }

 private:
  GridSpec spec_;
  GoalSpec goal_;
};

/// Validation shared with the config loader.
void validate_grid_spec(const GridSpec& spec);

}  // namespace agentsim
