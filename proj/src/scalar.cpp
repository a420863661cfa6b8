#include "agentsim/scalar.hpp"

#include <stdexcept>

namespace agentsim {

std::string ScalarValue::canonical_text() const {
  switch (kind()) {
    case Kind::Integer:
      return std::to_string(as_integer());
    case Kind::Decimal:
      return as_decimal().to_string();
    case Kind::Text:
      return as_text();
    case Kind::Boolean:
      return as_boolean() ? "true" : "false";
  }
  return {};
}

ordered_json ScalarValue::to_json() const {
  switch (kind()) {
    case Kind::Integer:
      return as_integer();
    case Kind::Decimal:
      return as_decimal().to_string();
    case Kind::Text:
      return as_text();
    case Kind::Boolean:
      return as_boolean();
  }
  return nullptr;
}

bool ScalarValue::looks_like_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t units = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    ++i;
    ++units;
  }
  if (units == 0 || i >= s.size() || s[i] != '.') return false;
  ++i;
  std::size_t frac = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    ++i;
    ++frac;
  }
  return frac == 4 && i == s.size();
}

namespace {

template <typename Json>
ScalarValue scalar_from_json(const Json& j) {
  if (j.is_boolean()) return ScalarValue::boolean(j.template get<bool>());
  if (j.is_number_integer()) {
    return ScalarValue::integer(j.template get<std::int64_t>());
  }
  if (j.is_number_float()) {
    return ScalarValue::decimal(Decimal::from_double(j.template get<double>()));
  }
  if (j.is_string()) {
    const auto s = j.template get<std::string>();
    if (ScalarValue::looks_like_decimal(s)) {
      return ScalarValue::decimal(Decimal::from_string(s));
    }
    return ScalarValue::text(s);
  }
  throw std::invalid_argument("JSON value is not a scalar");
}

}  // namespace

ScalarValue ScalarValue::from_json(const nlohmann::json& j) {
  return scalar_from_json(j);
}

ScalarValue ScalarValue::from_json(const ordered_json& j) {
  return scalar_from_json(j);
}

const char* kind_name(ScalarValue::Kind kind) {
  switch (kind) {
    case ScalarValue::Kind::Integer:
      return "integer";
    case ScalarValue::Kind::Decimal:
      return "decimal";
    case ScalarValue::Kind::Text:
      return "text";
    case ScalarValue::Kind::Boolean:
      return "boolean";
  }
  return "unknown";
}

}  // namespace agentsim
