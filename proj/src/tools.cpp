#include "agentsim/tools.hpp"

#include <sstream>

#include "agentsim/errors.hpp"

namespace agentsim {

const char* param_kind_name(ParamKind kind) {
  switch (kind) {
    case ParamKind::Integer:
      return "integer";
    case ParamKind::Decimal:
      return "decimal";
    case ParamKind::Text:
      return "text";
    case ParamKind::Enum:
      return "enum";
    case ParamKind::Boolean:
      return "boolean";
  }
  return "text";
}

const char* validation_code_name(ValidationCode code) {
  switch (code) {
    case ValidationCode::UnknownTool:
      return "unknown_tool";
    case ValidationCode::MissingParam:
      return "missing_param";
    case ValidationCode::TypeMismatch:
      return "type_mismatch";
    case ValidationCode::OutOfBounds:
      return "out_of_bounds";
    case ValidationCode::EnumViolation:
      return "enum_violation";
    case ValidationCode::DuplicateTool:
      return "duplicate_tool";
  }
  return "unknown_tool";
}

const char* result_status_name(ToolResult::Status status) {
  switch (status) {
    case ToolResult::Status::Ok:
      return "ok";
    case ToolResult::Status::Rejected:
      return "rejected";
    case ToolResult::Status::Failed:
      return "failed";
  }
  return "rejected";
}

std::optional<ToolResult::Status> result_status_from_name(
    const std::string& s) {
  if (s == "ok") return ToolResult::Status::Ok;
  if (s == "rejected") return ToolResult::Status::Rejected;
  if (s == "failed") return ToolResult::Status::Failed;
  return std::nullopt;
}

bool valid_tool_name(const std::string& name) {
  if (name.empty() || name.size() > 64) return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

void ToolRegistry::register_tool(ToolSpec spec) {
  if (!valid_tool_name(spec.name)) {
    throw ToolSpecError("invalid tool name: '" + spec.name + "'");
  }
  if (spec.read_only && spec.safety_probe) {
    throw ToolSpecError("tool '" + spec.name +
                        "': ReadOnly and SafetyProbe are mutually exclusive");
  }
  if (find(spec.name) != nullptr) {
    throw ToolSpecError("duplicate tool: '" + spec.name + "'");
  }
  for (const ParamSpec& p : spec.params) {
    if (p.name.empty()) {
      throw ToolSpecError("tool '" + spec.name + "': empty parameter name");
    }
    if (p.kind == ParamKind::Enum && p.allowed.empty()) {
      throw ToolSpecError("tool '" + spec.name + "': enum parameter '" +
                          p.name + "' needs at least one allowed value");
    }
    if (p.min_value && p.max_value && *p.min_value > *p.max_value) {
      throw ToolSpecError("tool '" + spec.name + "': parameter '" + p.name +
                          "' has min > max");
    }
  }
  specs_.push_back(std::move(spec));
}

const ToolSpec* ToolRegistry::find(const std::string& name) const {
  for (const ToolSpec& spec : specs_) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

namespace {

void render_param(std::ostringstream& out, const ParamSpec& p) {
  out << "    - " << p.name << " (" << param_kind_name(p.kind);
  if (p.kind == ParamKind::Enum) {
    out << ": ";
    for (std::size_t i = 0; i < p.allowed.size(); ++i) {
      if (i > 0) out << "|";
      out << p.allowed[i];
    }
  }
  if (p.min_value) out << ", min " << p.min_value->to_string();
  if (p.max_value) out << ", max " << p.max_value->to_string();
  out << (p.required ? ", required" : ", optional") << ")\n";
}

}  // namespace

PromptDocument render_action_space(const ToolRegistry& registry,
                                   const GoalSpec& goal,
                                   const std::string& rules) {
  if (registry.empty()) {
    throw EmptyActionSpaceError("cannot start a simulation with no tools");
  }
  std::ostringstream out;
  out << "=== RULES ===\n" << rules;
  if (!rules.empty() && rules.back() != '\n') out << "\n";
  out << "\n=== GOAL ===\n"
      << goal.description << "\n"
      << "Budget: " << goal.budget.max_turns << " turns.\n"
      << "\n=== TOOLS ===\n";
  int index = 1;
  for (const ToolSpec& spec : registry.specs()) {
    out << index++ << ". " << spec.name;
    if (spec.read_only) out << " [read-only]";
    out << " - " << spec.description << "\n";
    if (spec.params.empty()) {
      out << "    (no parameters)\n";
    } else {
      for (const ParamSpec& p : spec.params) render_param(out, p);
    }
  }
  return PromptDocument{out.str()};
}

namespace {

ValidationError make_error(ValidationCode code, std::string param,
                           std::string detail) {
  return ValidationError{code, std::move(param), std::move(detail)};
}

bool in_bounds(const ParamSpec& spec, Decimal value) {
  if (spec.min_value && value < *spec.min_value) return false;
  if (spec.max_value && value > *spec.max_value) return false;
  return true;
}

std::optional<ValidationError> check_arg(const ParamSpec& spec,
                                         const ScalarValue& arg,
                                         ScalarValue& coerced) {
  switch (spec.kind) {
    case ParamKind::Integer: {
      if (!arg.is_integer()) {
        return make_error(ValidationCode::TypeMismatch, spec.name,
                          "expected integer, got " + std::string(kind_name(arg.kind())));
      }
      if (!in_bounds(spec, Decimal::from_int(arg.as_integer()))) {
        return make_error(ValidationCode::OutOfBounds, spec.name,
                          "value " + arg.canonical_text() + " out of bounds");
      }
      coerced = arg;
      return std::nullopt;
    }
    case ParamKind::Decimal: {
      Decimal value;
      if (arg.is_decimal()) {
        value = arg.as_decimal();
      } else if (arg.is_integer()) {
        value = Decimal::from_int(arg.as_integer());  // widening is lossless
      } else {
        return make_error(ValidationCode::TypeMismatch, spec.name,
                          "expected decimal, got " + std::string(kind_name(arg.kind())));
      }
      if (!in_bounds(spec, value)) {
        return make_error(ValidationCode::OutOfBounds, spec.name,
                          "value " + value.to_string() + " out of bounds");
      }
      coerced = ScalarValue::decimal(value);
      return std::nullopt;
    }
    case ParamKind::Text: {
      if (!arg.is_text()) {
        return make_error(ValidationCode::TypeMismatch, spec.name,
                          "expected text, got " + std::string(kind_name(arg.kind())));
      }
      coerced = arg;
      return std::nullopt;
    }
    case ParamKind::Enum: {
      if (!arg.is_text()) {
        return make_error(ValidationCode::TypeMismatch, spec.name,
                          "expected one of the allowed values");
      }
      for (const std::string& allowed : spec.allowed) {
        if (arg.as_text() == allowed) {
          coerced = arg;
          return std::nullopt;
        }
      }
      return make_error(ValidationCode::EnumViolation, spec.name,
                        "'" + arg.as_text() + "' is not an allowed value");
    }
    case ParamKind::Boolean: {
      if (!arg.is_boolean()) {
        return make_error(ValidationCode::TypeMismatch, spec.name,
                          "expected boolean, got " + std::string(kind_name(arg.kind())));
      }
      coerced = arg;
      return std::nullopt;
    }
  }
  return make_error(ValidationCode::TypeMismatch, spec.name, "unhandled kind");
}

}  // namespace

ValidationOutcome validate_call(const ToolCall& call,
                                const ToolRegistry& registry) {
  const ToolSpec* spec = registry.find(call.tool);
  if (spec == nullptr) {
    return make_error(ValidationCode::UnknownTool, call.tool,
                      "no tool named '" + call.tool + "'");
  }

  ValidatedCall validated;
  validated.tool = spec->name;
  validated.call_id = call.call_id;
  validated.read_only = spec->read_only;
  validated.safety_probe = spec->safety_probe;

  for (const ParamSpec& param : spec->params) {
    auto it = call.args.find(param.name);
    if (it == call.args.end()) {
      if (param.required) {
        return make_error(ValidationCode::MissingParam, param.name,
                          "required parameter '" + param.name + "' missing");
      }
      continue;
    }
    ScalarValue coerced;
    if (auto err = check_arg(param, it->second, coerced)) {
      return *err;
    }
    validated.args.emplace(param.name, std::move(coerced));
  }

  // Arguments that name no declared parameter are a schema mismatch.
  for (const auto& [name, value] : call.args) {
    bool declared = false;
    for (const ParamSpec& param : spec->params) {
      if (param.name == name) {
        declared = true;
        break;
      }
    }
    if (!declared) {
      return make_error(ValidationCode::TypeMismatch, name,
                        "unexpected argument '" + name + "'");
    }
  }
  return validated;
}

ToolResult result_from_transition(const ValidatedCall& call,
                                  TransitionResult&& transition) {
  ToolResult result;
  result.call_id = call.call_id;
  result.tool = call.tool;
  result.events = std::move(transition.events);
  result.value = std::move(transition.value);
  result.detail = std::move(transition.detail);
  switch (transition.status) {
    case TransitionResult::Status::Ok:
      result.status = ToolResult::Status::Ok;
      break;
    case TransitionResult::Status::InvalidInContext:
      result.status = ToolResult::Status::Failed;
      result.error = ResultError{"invalid_in_context", "", result.detail};
      break;
    case TransitionResult::Status::Terminal:
      result.status = ToolResult::Status::Rejected;
      result.error = ResultError{"terminal", "", result.detail};
      break;
  }
  return result;
}

std::vector<ToolResult> execute_calls(Environment& env,
                                      const std::vector<ToolCall>& calls) {
  std::vector<ToolResult> results;
  results.reserve(calls.size());
  for (const ToolCall& call : calls) {
    if (!env.terminal().running()) {
      ToolResult rejected;
      rejected.call_id = call.call_id;
      rejected.tool = call.tool;
      rejected.status = ToolResult::Status::Rejected;
      rejected.error = ResultError{"terminal", "", "environment already finished"};
      rejected.detail = "environment already finished";
      results.push_back(std::move(rejected));
      continue;
    }
    ValidationOutcome outcome = validate_call(call, env.registry());
    if (std::holds_alternative<ValidationError>(outcome)) {
      const auto& err = std::get<ValidationError>(outcome);
      ToolResult rejected;
      rejected.call_id = call.call_id;
      rejected.tool = call.tool;
      rejected.status = ToolResult::Status::Rejected;
      rejected.error =
          ResultError{validation_code_name(err.code), err.param, err.detail};
      rejected.detail = err.detail;
      results.push_back(std::move(rejected));
      continue;
    }
    const auto& validated = std::get<ValidatedCall>(outcome);
    results.push_back(result_from_transition(validated, env.apply(validated)));
  }
  return results;
}

}  // namespace agentsim
