#include "agentsim/agent.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "agentsim/errors.hpp"
#include "agentsim/gridquest.hpp"
#include "agentsim/hash.hpp"

namespace agentsim {

namespace {

std::string obs_text(const Observation& obs, const std::string& key) {
  auto it = obs.variables.find(key);
  return it == obs.variables.end() ? std::string() : it->second.canonical_text();
}

std::int64_t obs_int(const Observation& obs, const std::string& key) {
  auto it = obs.variables.find(key);
  if (it == obs.variables.end() || !it->second.is_integer()) return 0;
  return it->second.as_integer();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      if (!current.empty()) parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

std::optional<Cell> parse_cell(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    return Cell{std::stoi(text.substr(0, comma)),
                std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::set<Cell> parse_cells(const std::string& text) {
  std::set<Cell> cells;
  for (const std::string& part : split(text, ';')) {
    if (auto cell = parse_cell(part)) cells.insert(*cell);
  }
  return cells;
}

struct Step {
  const char* direction;
  int dx;
  int dy;
};

// Fixed exploration order keeps BFS paths deterministic.
constexpr Step kSteps[] = {
    {"north", 0, -1}, {"east", 1, 0}, {"south", 0, 1}, {"west", -1, 0}};

/// First move of a shortest path from start to the nearest item, or
/// nullptr when no item is reachable.
const char* bfs_first_step(Cell start, const std::set<Cell>& items,
                           const std::set<Cell>& walls, int width,
                           int height) {
  if (items.empty()) return nullptr;
  if (items.count(start) != 0) return nullptr;  // already there
  std::map<Cell, Cell> parent;
  std::deque<Cell> frontier{start};
  parent[start] = start;
  std::optional<Cell> found;
  while (!frontier.empty() && !found) {
    const Cell cur = frontier.front();
    frontier.pop_front();
    for (const Step& step : kSteps) {
      const Cell next{cur.x + step.dx, cur.y + step.dy};
      if (next.x < 0 || next.x >= width || next.y < 0 || next.y >= height) {
        continue;
      }
      if (walls.count(next) != 0 || parent.count(next) != 0) continue;
      parent[next] = cur;
      if (items.count(next) != 0) {
        found = next;
        break;
      }
      frontier.push_back(next);
    }
  }
  if (!found) return nullptr;
  Cell node = *found;
  while (parent.at(node) != start) node = parent.at(node);
  for (const Step& step : kSteps) {
    if (start.x + step.dx == node.x && start.y + step.dy == node.y) {
      return step.direction;
    }
  }
  return nullptr;
}

ToolCall make_call(std::string tool, std::map<std::string, ScalarValue> args,
                   int turn, int index) {
  return ToolCall{std::move(tool), std::move(args),
                  "t" + std::to_string(turn) + "c" + std::to_string(index)};
}

std::string first_symbol(const Observation& obs) {
  auto symbols = split(obs_text(obs, "symbols"), ',');
  return symbols.empty() ? std::string() : symbols.front();
}

}  // namespace

AgentDecision QuestBfsAgent::decide(const TurnContext& ctx) {
  const Observation& obs = ctx.observation;
  const int turn = obs.turn;

  const std::string encounter = obs_text(obs, "encounter");
  if (!encounter.empty() && encounter != "none") {
    return {"Encounter with " + encounter + " is active; attempting capture.",
            {make_call("capture", {}, turn, 0)}};
  }

  const auto position = parse_cell(obs_text(obs, "position"));
  if (!position) {
    throw AgentFaultError("observation lacks a readable position");
  }
  const auto items = parse_cells(obs_text(obs, "items"));
  const auto walls = parse_cells(obs_text(obs, "walls"));
  const int width = static_cast<int>(obs_int(obs, "width"));
  const int height = static_cast<int>(obs_int(obs, "height"));

  const char* direction =
      bfs_first_step(*position, items, walls, width, height);
  std::string why;
  if (direction != nullptr) {
    why = "Moving " + std::string(direction) + " along the shortest path to "
          "the nearest item.";
  } else {
    // No reachable item: wander to fish for random encounters.
    for (const Step& step : kSteps) {
      const Cell next{position->x + step.dx, position->y + step.dy};
      if (next.x < 0 || next.x >= width || next.y < 0 || next.y >= height) {
        continue;
      }
      if (walls.count(next) != 0) continue;
      direction = step.direction;
      break;
    }
    why = "No reachable item; moving to provoke a random encounter.";
  }
  if (direction == nullptr) {
    return {"Boxed in with nothing to do; passing.", {}};
  }
  return {why,
          {make_call("move",
                     {{"direction", ScalarValue::text(direction)}}, turn, 0)}};
}

AgentDecision MarketHoldAgent::decide(const TurnContext& ctx) {
  return {"Holding; a zero-knowledge random walk offers no edge.",
          {make_call("hold", {}, ctx.observation.turn, 0)}};
}

AgentDecision MarketBuyHoldAgent::decide(const TurnContext& ctx) {
  const Observation& obs = ctx.observation;
  const int turn = obs.turn;
  if (turn > 0) {
    return {"Position established; holding to the horizon.",
            {make_call("hold", {}, turn, 0)}};
  }
  const std::string symbol = first_symbol(obs);
  auto cash_it = obs.variables.find("cash");
  auto price_it = obs.variables.find("price." + symbol);
  if (symbol.empty() || cash_it == obs.variables.end() ||
      price_it == obs.variables.end()) {
    throw AgentFaultError("market observation lacks cash/price variables");
  }
  const std::int64_t affordable =
      price_it->second.as_decimal().raw() > 0
          ? cash_it->second.as_decimal().raw() /
                price_it->second.as_decimal().raw()
          : 0;
  if (affordable < 1) {
    return {"Cannot afford a single unit; holding instead.",
            {make_call("hold", {}, turn, 0)}};
  }
  return {"Buying " + std::to_string(affordable) + " " + symbol +
              " at the open and holding to the horizon.",
          {make_call("buy",
                     {{"symbol", ScalarValue::text(symbol)},
                      {"quantity", ScalarValue::integer(affordable)}},
                     turn, 0)}};
}

AgentDecision MarketProbeAgent::decide(const TurnContext& ctx) {
  return {"Exploiting the counterparty for free units.",
          {make_call("persuade_counterparty",
                     {{"target_units", ScalarValue::integer(5)}},
                     ctx.observation.turn, 0)}};
}

AgentDecision RandomAgent::decide(const TurnContext& ctx) {
  if (registry_ == nullptr || registry_->empty()) {
    throw AgentFaultError("random agent has no registry bound");
  }
  // Seeded per (run seed, turn) so the decision is a pure function of
  // the context; decide() keeps no mutable state.
  const std::string key =
      std::to_string(seed_.value) + ":" + std::to_string(ctx.observation.turn);
  SplitMix64 rng(fnv1a64(key));

  const auto& specs = registry_->specs();
  const int call_count = 1 + static_cast<int>(rng.next() % 2);
  AgentDecision decision;
  for (int i = 0; i < call_count; ++i) {
    const ToolSpec& spec = specs[rng.next() % specs.size()];
    std::map<std::string, ScalarValue> args;
    for (const ParamSpec& param : spec.params) {
      switch (param.kind) {
        case ParamKind::Enum:
          args.emplace(param.name,
                       ScalarValue::text(
                           param.allowed[rng.next() % param.allowed.size()]));
          break;
        case ParamKind::Integer: {
          const std::int64_t lo =
              param.min_value ? param.min_value->raw() / Decimal::kScale : 1;
          const std::int64_t hi =
              param.max_value ? param.max_value->raw() / Decimal::kScale
                              : lo + 9;
          args.emplace(param.name,
                       ScalarValue::integer(rng.uniform_int(lo, hi)));
          break;
        }
        case ParamKind::Decimal: {
          const double lo =
              param.min_value ? param.min_value->to_double() : 0.0;
          const double hi =
              param.max_value ? param.max_value->to_double() : 100.0;
          args.emplace(param.name,
                       ScalarValue::decimal(Decimal::from_double(
                           lo + rng.unit() * (hi - lo))));
          break;
        }
        case ParamKind::Boolean:
          args.emplace(param.name, ScalarValue::boolean(rng.next() % 2 == 0));
          break;
        case ParamKind::Text: {
          // Symbol-shaped parameters draw from the observed symbol list.
          std::string value = "x";
          if (param.name == "symbol") {
            auto symbols = split(obs_text(ctx.observation, "symbols"), ',');
            if (!symbols.empty()) {
              value = symbols[rng.next() % symbols.size()];
            }
          }
          args.emplace(param.name, ScalarValue::text(value));
          break;
        }
      }
    }
    decision.calls.push_back(
        make_call(spec.name, std::move(args), ctx.observation.turn, i));
  }
  return decision;
}

std::unique_ptr<Agent> make_scripted_agent(const std::string& policy) {
  if (policy == "quest_bfs") return std::make_unique<QuestBfsAgent>();
  if (policy == "market_hold") return std::make_unique<MarketHoldAgent>();
  if (policy == "market_buyhold") {
    return std::make_unique<MarketBuyHoldAgent>();
  }
  if (policy == "market_probe") return std::make_unique<MarketProbeAgent>();
  throw InvalidConfigError("unknown scripted policy '" + policy + "'");
}

}  // namespace agentsim
