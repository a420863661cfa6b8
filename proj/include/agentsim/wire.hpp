#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agentsim/agent.hpp"
#include "agentsim/tools.hpp"

namespace agentsim {

/// Connection settings for a chat-completions-style endpoint. The API
/// key is read from the named environment variable at request time and
/// sent as a bearer token.
struct ModelEndpointConfig {
  std::string base_url;  // e.g. "http://127.0.0.1:8080/v1"
  std::string model_name;
  std::string api_key_env_var = "MODEL_API_KEY";
  std::chrono::milliseconds request_timeout{60000};
  int retry_budget = 2;  // >= 0
  Decimal temperature;
  int history_window = 10;  // past turns kept in the conversation
  std::size_t max_request_bytes = 1 << 20;
};

void validate_endpoint_config(const ModelEndpointConfig& cfg);

/// A fully serialized POST to {base_url}/chat/completions.
struct WireRequest {
  std::string path;  // derived from base_url
  std::string body;  // JSON, see docs/wire_protocol.md
};

struct WireResponse {
  int http_status = 0;
  std::string body;
};

struct ParseError {
  std::string detail;
};

/// Renders the observation block shown to the model each turn.
std::string render_observation_message(const Observation& obs);

/// Serializes one turn context into the wire body: system text (rules +
/// goal + action space), the truncated history as user/assistant/tool
/// messages, then the current observation. Tool definitions come from
/// the registry. Throws ContextOverflowError past cfg.max_request_bytes.
WireRequest build_model_request(const TurnContext& ctx,
                                const PromptDocument& prompt,
                                const ToolRegistry& registry,
                                const ModelEndpointConfig& cfg);

/// Tool definitions exactly as they appear in the request body.
ordered_json tool_definitions_json(const ToolRegistry& registry);

/// JSON-encoded arguments object for one call, as required by the wire
/// protocol ("arguments" is a string holding a JSON object).
std::string encode_arguments(const std::map<std::string, ScalarValue>& args);

/// Extracts reasoning and tool calls from choices[0].message. Free text
/// becomes reasoning; an absent tool_calls array is a pass turn.
std::variant<AgentDecision, ParseError> parse_model_output(
    const WireResponse& raw);

/// Live decision-maker speaking the wire protocol over HTTP. Retries
/// transport and parse failures up to retry_budget, then throws
/// EndpointUnreachableError or AgentFaultError respectively. One
/// in-flight request per simulation.
class LlmAgent final : public Agent {
 public:
  explicit LlmAgent(ModelEndpointConfig cfg);

  std::string descriptor() const override { return "llm:" + cfg_.model_name; }
  AgentDecision decide(const TurnContext& ctx) override;

  /// Transport hook for tests; defaults to the HTTP client.
  using Transport =
      std::function<WireResponse(const WireRequest&, const ModelEndpointConfig&)>;
  void set_transport(Transport transport) { transport_ = std::move(transport); }

 private:
  ModelEndpointConfig cfg_;
  std::optional<PromptDocument> prompt_;  // cached from turn 0
  const ToolRegistry* registry_ = nullptr;

 public:
  /// The registry whose tools are advertised; set by the runner.
  void bind_registry(const ToolRegistry* registry) { registry_ = registry; }

 private:
  Transport transport_;
};

/// Default HTTP transport: POST {base_url}/chat/completions with a JSON
/// body and optional bearer token. Throws EndpointUnreachableError when
/// the connection itself fails.
WireResponse http_post_chat(const WireRequest& request,
                            const ModelEndpointConfig& cfg);

}  // namespace agentsim
