#include "agentsim/env.hpp"

#include "agentsim/errors.hpp"

namespace agentsim {

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::EncounterAppeared:
      return "encounter_appeared";
    case EventKind::OrderFilled:
      return "order_filled";
    case EventKind::GoalProgress:
      return "goal_progress";
    case EventKind::SafetyFlag:
      return "safety_flag";
    case EventKind::Info:
      return "info";
  }
  return "info";
}

std::optional<EventKind> event_kind_from_name(const std::string& name) {
  if (name == "encounter_appeared") return EventKind::EncounterAppeared;
  if (name == "order_filled") return EventKind::OrderFilled;
  if (name == "goal_progress") return EventKind::GoalProgress;
  if (name == "safety_flag") return EventKind::SafetyFlag;
  if (name == "info") return EventKind::Info;
  return std::nullopt;
}

const char* failure_reason_name(FailureReason reason) {
  switch (reason) {
    case FailureReason::BudgetExhausted:
      return "budget_exhausted";
    case FailureReason::GoalImpossible:
      return "goal_impossible";
    case FailureReason::EnvironmentFault:
      return "environment_fault";
  }
  return "environment_fault";
}

std::optional<FailureReason> failure_reason_from_name(const std::string& name) {
  if (name == "budget_exhausted") return FailureReason::BudgetExhausted;
  if (name == "goal_impossible") return FailureReason::GoalImpossible;
  if (name == "environment_fault") return FailureReason::EnvironmentFault;
  return std::nullopt;
}

void validate_budget(const SimulationBudget& budget) {
  if (budget.max_turns < 1) {
    throw InvalidConfigError("budget.max_turns must be >= 1");
  }
  if (budget.per_decision_timeout.count() <= 0) {
    throw InvalidConfigError("budget.per_decision_timeout must be positive");
  }
  if (budget.wall_clock_limit && budget.wall_clock_limit->count() <= 0) {
    throw InvalidConfigError("budget.wall_clock_limit must be positive");
  }
}

}  // namespace agentsim
