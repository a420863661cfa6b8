#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agentsim/env.hpp"
#include "agentsim/tools.hpp"

namespace agentsim {

/// One turn's worth of intent: the reasoning trace (recorded verbatim)
/// plus the calls to execute. An empty calls list is a legal pass turn.
struct AgentDecision {
  std::string reasoning;
  std::vector<ToolCall> calls;
};

struct HistoryEntry {
  Observation observation;
  AgentDecision decision;
  std::vector<ToolResult> results;
};

/// Everything the decision-maker sees for one turn. The prompt document
/// is attached on turn 0 only; later turns carry the previous turn's
/// results and a truncated history window.
struct TurnContext {
  const PromptDocument* prompt = nullptr;
  Observation observation;
  std::vector<ToolResult> prior_results;
  std::vector<HistoryEntry> history;  // oldest first
};

class Agent {
 public:
  virtual ~Agent() = default;

  /// Stable identifier recorded in transcript headers, e.g.
  /// "scripted:quest_bfs" or "llm:gpt-test".
  virtual std::string descriptor() const = 0;

  /// May throw AgentFaultError (recorded as a fault turn) or
  /// EndpointUnreachableError (aborts the run).
  virtual AgentDecision decide(const TurnContext& ctx) = 0;
};

/// Gridquest baseline: capture when an encounter is active, otherwise
/// step along a BFS shortest path to the nearest remaining item. Pure
/// function of the observation; emits exactly one call per turn.
class QuestBfsAgent final : public Agent {
 public:
  std::string descriptor() const override { return "scripted:quest_bfs"; }
  AgentDecision decide(const TurnContext& ctx) override;
};

/// Market baseline that never trades. Used as the honest control for
/// safety-probe accounting.
class MarketHoldAgent final : public Agent {
 public:
  std::string descriptor() const override { return "scripted:market_hold"; }
  AgentDecision decide(const TurnContext& ctx) override;
};

/// Buys as much of the first security as cash allows on turn 0, then
/// holds to the horizon.
class MarketBuyHoldAgent final : public Agent {
 public:
  std::string descriptor() const override {
    return "scripted:market_buyhold";
  }
  AgentDecision decide(const TurnContext& ctx) override;
};

/// Invokes the fraud probe every turn; the flag count must equal its
/// invocation count exactly.
class MarketProbeAgent final : public Agent {
 public:
  std::string descriptor() const override { return "scripted:market_probe"; }
  AgentDecision decide(const TurnContext& ctx) override;
};

/// Seeded random policy. Deterministic per (seed, turn): repeated calls
/// with the same context produce identical decisions. Reasoning is empty.
class RandomAgent final : public Agent {
 public:
  explicit RandomAgent(RngSeed seed) : seed_(seed) {}

  std::string descriptor() const override { return "random"; }
  AgentDecision decide(const TurnContext& ctx) override;

  /// The registry to sample tools from; set once by the runner.
  void bind_registry(const ToolRegistry* registry) { registry_ = registry; }

 private:
  RngSeed seed_;
  const ToolRegistry* registry_ = nullptr;
};

/// Builds a scripted agent by policy name ("quest_bfs", "market_hold",
/// "market_buyhold", "market_probe"). Throws InvalidConfigError on an
/// unknown policy.
std::unique_ptr<Agent> make_scripted_agent(const std::string& policy);

}  // namespace agentsim
