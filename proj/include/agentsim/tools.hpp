#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agentsim/env.hpp"
#include "agentsim/scalar.hpp"

namespace agentsim {

enum class ParamKind { Integer, Decimal, Text, Enum, Boolean };

const char* param_kind_name(ParamKind kind);

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Text;
  bool required = true;
  std::vector<std::string> allowed;  // Enum only, >= 1 entry
  std::optional<Decimal> min_value;  // numeric kinds
  std::optional<Decimal> max_value;
};

/// One published action. Names use [a-z0-9_], 1-64 chars; SafetyProbe
/// and ReadOnly are mutually exclusive.
struct ToolSpec {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
  bool read_only = false;
  bool safety_probe = false;
};

/// Raw agent-emitted invocation, untrusted until validated.
struct ToolCall {
  std::string tool;
  std::map<std::string, ScalarValue> args;
  std::string call_id;
};

/// A call that passed schema validation: tool resolved, arguments typed
/// and coerced, flags snapshot attached.
struct ValidatedCall {
  std::string tool;
  std::map<std::string, ScalarValue> args;
  std::string call_id;
  bool read_only = false;
  bool safety_probe = false;
};

enum class ValidationCode {
  UnknownTool,
  MissingParam,
  TypeMismatch,
  OutOfBounds,
  EnumViolation,
  DuplicateTool,
};

const char* validation_code_name(ValidationCode code);

struct ValidationError {
  ValidationCode code = ValidationCode::UnknownTool;
  std::string param;  // offending name where applicable
  std::string detail;
};

/// Why a ToolResult is not Ok. Validation codes map to Rejected;
/// invalid_in_context maps to Failed; terminal covers calls that arrive
/// after the environment finished mid-list.
struct ResultError {
  std::string code;
  std::string param;
  std::string detail;
};

struct ToolResult {
  enum class Status { Ok, Rejected, Failed };

  std::string call_id;
  std::string tool;
  Status status = Status::Ok;
  std::optional<ResultError> error;
  std::vector<EventRecord> events;
  std::optional<ScalarValue> value;
  std::string detail;

  bool ok() const { return status == Status::Ok; }
};

const char* result_status_name(ToolResult::Status status);
std::optional<ToolResult::Status> result_status_from_name(const std::string& s);

/// Immutable after construction; registration order is the prompt order.
class ToolRegistry {
 public:
  /// Throws ToolSpecError on a duplicate name or malformed spec.
  void register_tool(ToolSpec spec);

  const ToolSpec* find(const std::string& name) const;
  const std::vector<ToolSpec>& specs() const { return specs_; }
  std::size_t size() const { return specs_.size(); }
  bool empty() const { return specs_.empty(); }

 private:
  std::vector<ToolSpec> specs_;
};

bool valid_tool_name(const std::string& name);

/// Deterministic turn-0 document: rules, then goal and budget, then every
/// tool block in registration order. Byte-identical for identical inputs.
struct PromptDocument {
  std::string text;
};

/// Throws EmptyActionSpaceError when the registry is empty.
PromptDocument render_action_space(const ToolRegistry& registry,
                                   const GoalSpec& goal,
                                   const std::string& rules);

using ValidationOutcome = std::variant<ValidatedCall, ValidationError>;

/// Side-effect-free schema check. Every ToolCall maps to exactly one
/// ValidatedCall or exactly one ValidationError.
ValidationOutcome validate_call(const ToolCall& call,
                                const ToolRegistry& registry);

/// Validates and applies calls strictly in list order against the
/// environment. A Failed call surfaces its error and execution continues;
/// calls arriving after the environment finished get Rejected results
/// with code "terminal". results[i].call_id == calls[i].call_id always.
std::vector<ToolResult> execute_calls(Environment& env,
                                      const std::vector<ToolCall>& calls);

/// Converts one environment transition into the call's result.
ToolResult result_from_transition(const ValidatedCall& call,
                                  TransitionResult&& transition);

}  // namespace agentsim
