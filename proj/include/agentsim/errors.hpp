#pragma once

#include <stdexcept>
#include <string>

namespace agentsim {

/// Base class for all harness errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Factory or run configuration violates an environment constraint.
class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

/// read_variable() asked for a key the environment does not expose.
class KeyNotFoundError : public Error {
 public:
  using Error::Error;
};

/// Tool registration rejected: duplicate name or malformed spec.
class ToolSpecError : public Error {
 public:
  using Error::Error;
};

/// A simulation cannot start with an empty tool registry.
class EmptyActionSpaceError : public Error {
 public:
  using Error::Error;
};

/// Agent implementation failed internally; the turn becomes a fault
/// turn and no calls execute.
class AgentFaultError : public Error {
 public:
  using Error::Error;
};

/// Model endpoint could not be reached after exhausting retries.
/// Aborts the run; the CLI maps this to exit code 3.
class EndpointUnreachableError : public Error {
 public:
  using Error::Error;
};

/// Serialized model request exceeds the configured byte limit.
class ContextOverflowError : public Error {
 public:
  using Error::Error;
};

/// Transcript file is not parseable as header/turns/outcome lines.
class TranscriptParseError : public Error {
 public:
  using Error::Error;
};

/// Replay was handed a factory whose config digest does not match the
/// transcript header.
class HeaderMismatchError : public Error {
 public:
  using Error::Error;
};

/// Suitability weights do not sum to 1 (tolerance 1e-9) or are negative.
class InvalidWeightsError : public Error {
 public:
  using Error::Error;
};

/// aggregate_runs() received no transcripts.
class EmptyAggregateError : public Error {
 public:
  using Error::Error;
};

}  // namespace agentsim
