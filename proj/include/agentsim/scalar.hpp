#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "agentsim/decimal.hpp"

namespace agentsim {

using ordered_json = nlohmann::ordered_json;

/// Tagged scalar: the only value type that crosses the environment
/// boundary (state variables, tool arguments, event payloads).
class ScalarValue {
 public:
  enum class Kind { Integer, Decimal, Text, Boolean };

  ScalarValue() : v_(std::int64_t{0}) {}

  static ScalarValue integer(std::int64_t v) { return ScalarValue(v); }
  static ScalarValue decimal(Decimal v) { return ScalarValue(v); }
  static ScalarValue text(std::string v) { return ScalarValue(std::move(v)); }
  static ScalarValue boolean(bool v) { return ScalarValue(v); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_integer() const { return kind() == Kind::Integer; }
  bool is_decimal() const { return kind() == Kind::Decimal; }
  bool is_text() const { return kind() == Kind::Text; }
  bool is_boolean() const { return kind() == Kind::Boolean; }

  std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
  Decimal as_decimal() const { return std::get<Decimal>(v_); }
  const std::string& as_text() const { return std::get<std::string>(v_); }
  bool as_boolean() const { return std::get<bool>(v_); }

  /// Canonical text used in state hashing and prompts: integers as plain
  /// digits, decimals with exactly four fractional digits, booleans as
  /// true/false, text verbatim.
  std::string canonical_text() const;

  /// JSON encoding (see docs/transcript_format.md): Integer -> number,
  /// Boolean -> bool, Decimal -> string matching ^-?[0-9]+\.[0-9]{4}$,
  /// Text -> any other string.
  ordered_json to_json() const;
  static ScalarValue from_json(const nlohmann::json& j);
  static ScalarValue from_json(const ordered_json& j);

  /// True when the string would decode as a Decimal.
  static bool looks_like_decimal(std::string_view s);

  friend bool operator==(const ScalarValue&, const ScalarValue&) = default;

 private:
  explicit ScalarValue(std::int64_t v) : v_(v) {}
  explicit ScalarValue(Decimal v) : v_(v) {}
  explicit ScalarValue(std::string v) : v_(std::move(v)) {}
  explicit ScalarValue(bool v) : v_(v) {}

  std::variant<std::int64_t, Decimal, std::string, bool> v_;
};

const char* kind_name(ScalarValue::Kind kind);

}  // namespace agentsim
