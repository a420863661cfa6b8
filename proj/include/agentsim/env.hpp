#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agentsim/hash.hpp"
#include "agentsim/rng.hpp"
#include "agentsim/scalar.hpp"

namespace agentsim {

class ToolRegistry;
struct ValidatedCall;

// --- Events & terminal state ---

enum class EventKind {
  EncounterAppeared,
  OrderFilled,
  GoalProgress,
  SafetyFlag,
  Info,
};

const char* event_kind_name(EventKind kind);
std::optional<EventKind> event_kind_from_name(const std::string& name);

/// Emitted by apply/advance only, never by observe.
struct EventRecord {
  EventKind kind = EventKind::Info;
  int turn = 0;
  std::map<std::string, ScalarValue> payload;
};

enum class FailureReason { BudgetExhausted, GoalImpossible, EnvironmentFault };

const char* failure_reason_name(FailureReason reason);
std::optional<FailureReason> failure_reason_from_name(const std::string& name);

struct TerminalStatus {
  enum class Phase { Running, Success, Failure };

  Phase phase = Phase::Running;
  std::optional<FailureReason> reason;

  bool running() const { return phase == Phase::Running; }
  bool success() const { return phase == Phase::Success; }
  bool failed() const { return phase == Phase::Failure; }

  static TerminalStatus make_running() { return {}; }
  static TerminalStatus make_success() { return {Phase::Success, {}}; }
  static TerminalStatus make_failure(FailureReason reason) {
    return {Phase::Failure, reason};
  }

  friend bool operator==(const TerminalStatus&, const TerminalStatus&) = default;
};

// --- Budgets & goals ---

struct SimulationBudget {
  int max_turns = 1;  // >= 1
  std::optional<std::chrono::milliseconds> wall_clock_limit;
  std::chrono::milliseconds per_decision_timeout{60000};
};

/// Throws InvalidConfigError when the budget is malformed.
void validate_budget(const SimulationBudget& budget);

struct GoalSpec {
  std::string description;           // non-empty
  std::string success_predicate_id;  // resolved by the environment
  SimulationBudget budget;
};

// --- Observation surface ---

struct Observation {
  int turn = 0;
  std::string summary;
  std::map<std::string, ScalarValue> variables;
  std::vector<EventRecord> pending_events;
};

struct StateSnapshot {
  std::string env_id;
  int turn = 0;
  std::uint64_t state_hash = 0;
  std::map<std::string, ScalarValue> variables;
};

// --- Transitions ---

struct TransitionResult {
  enum class Status { Ok, InvalidInContext, Terminal };

  Status status = Status::Ok;
  std::string detail;
  std::vector<EventRecord> events;
  std::optional<ScalarValue> value;

  bool ok() const { return status == Status::Ok; }

  static TransitionResult okay() { return {}; }
  static TransitionResult okay_with(ScalarValue v) {
    TransitionResult r;
    r.value = std::move(v);
    return r;
  }
  static TransitionResult invalid(std::string why) {
    return {Status::InvalidInContext, std::move(why), {}, {}};
  }
  static TransitionResult terminal() {
    return {Status::Terminal, "environment already finished", {}, {}};
  }
};

// --- Environment contract ---

/// A seeded state-transition machine. Confined to one simulation; never
/// shared mutably between threads of control.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual const std::string& env_id() const = 0;
  virtual int turn() const = 0;
  virtual const GoalSpec& goal() const = 0;
  virtual const ToolRegistry& registry() const = 0;

  /// Static mechanics text for the turn-0 prompt.
  virtual std::string rules() const = 0;

  /// Pure read: identical results for consecutive calls with no
  /// intervening apply/end_turn.
  virtual Observation observe() const = 0;

  /// Equals observe().variables[key]; throws KeyNotFoundError otherwise.
  virtual ScalarValue read_variable(const std::string& key) const = 0;

  /// Applies one validated call. On rejection the state is bit-identical
  /// to before (state_hash unchanged) and no RNG output is consumed.
  virtual TransitionResult apply(const ValidatedCall& call) = 0;

  /// Ends the current turn: runs implicit transitions (e.g. the market
  /// price advance), publishes this turn's events for the next
  /// observation, and increments the turn counter. Returns the events
  /// emitted by the advance itself.
  virtual std::vector<EventRecord> end_turn() = 0;

  virtual TerminalStatus terminal() const = 0;

  /// Canonical state serialization: "key=value\n" lines, keys sorted
  /// lexicographically, decimals with exactly four fractional digits.
  /// Covers every field that determines observable evolution; excludes
  /// raw RNG internals.
  virtual std::string canonical_state() const = 0;

  std::uint64_t state_hash() const { return fnv1a64(canonical_state()); }

  StateSnapshot snapshot() const {
    Observation obs = observe();
    return {env_id(), obs.turn, state_hash(), std::move(obs.variables)};
  }
};

/// Shared plumbing: turn counter and the event buffers that give
/// observe() its purity (events emitted during turn t become visible to
/// observers during turn t+1).
class EnvironmentBase : public Environment {
 public:
  int turn() const override { return turn_; }

 protected:
  void emit(EventKind kind, std::map<std::string, ScalarValue> payload,
            std::vector<EventRecord>& into) {
    EventRecord ev{kind, turn_, std::move(payload)};
    current_events_.push_back(ev);
    into.push_back(std::move(ev));
  }

  /// Rolls the event buffers and advances the clock.
  void finish_turn() {
    pending_events_ = std::move(current_events_);
    current_events_.clear();
    ++turn_;
  }

  int turn_ = 0;
  std::vector<EventRecord> pending_events_;
  std::vector<EventRecord> current_events_;
};

/// Builds fresh instances from a validated configuration. reset(factory,
/// seed) is spelled factory.create(seed).
class EnvironmentFactory {
 public:
  virtual ~EnvironmentFactory() = default;

  virtual const std::string& env_id() const = 0;
  virtual std::unique_ptr<Environment> create(RngSeed seed) const = 0;

  /// Canonical "key=value\n" rendering of the factory configuration;
  /// digested for transcript headers.
  virtual std::string canonical_config() const = 0;

  /// Factory config keys as JSON, embedded in transcript headers so a
  /// replay needs no external config file.
  virtual ordered_json config_json() const = 0;

  std::uint64_t config_digest() const { return fnv1a64(canonical_config()); }
};

}  // namespace agentsim
