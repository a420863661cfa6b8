#include "agentsim/decimal.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace agentsim {

namespace {

[[noreturn]] void bad_decimal(std::string_view text) {
  throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
}

}  // namespace

Decimal Decimal::from_double(double value) {
  const double scaled = value * static_cast<double>(kScale);
  if (!std::isfinite(scaled) ||
      scaled >= 9.2233720368547758e18 || scaled <= -9.2233720368547758e18) {
    throw std::overflow_error("decimal out of range");
  }
  return Decimal(static_cast<std::int64_t>(std::llround(scaled)));
}

Decimal Decimal::from_string(std::string_view text) {
  if (text.empty()) bad_decimal(text);
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    i = 1;
  }
  if (i >= text.size()) bad_decimal(text);

  std::int64_t units = 0;
  std::size_t digits = 0;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (text[i] < '0' || text[i] > '9') bad_decimal(text);
    units = units * 10 + (text[i] - '0');
    if (units > 922337203685477LL) throw std::overflow_error("decimal out of range");
    ++digits;
  }
  if (digits == 0) bad_decimal(text);

  std::int64_t frac = 0;
  std::size_t frac_digits = 0;
  if (i < text.size()) {
    ++i;  // skip '.'
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') bad_decimal(text);
      if (++frac_digits > 4) bad_decimal(text);
      frac = frac * 10 + (text[i] - '0');
    }
    if (frac_digits == 0) bad_decimal(text);
  }
  while (frac_digits < 4) {
    frac *= 10;
    ++frac_digits;
  }
  const std::int64_t raw = units * kScale + frac;
  return Decimal(negative ? -raw : raw);
}

std::string Decimal::to_string() const {
  const bool negative = raw_ < 0;
  // Avoid UB on INT64_MIN by splitting before negation.
  std::uint64_t magnitude =
      negative ? ~static_cast<std::uint64_t>(raw_) + 1
               : static_cast<std::uint64_t>(raw_);
  const std::uint64_t units = magnitude / kScale;
  const std::uint64_t frac = magnitude % kScale;
  std::string out;
  if (negative && magnitude != 0) out.push_back('-');
  out += std::to_string(units);
  out.push_back('.');
  std::string frac_text = std::to_string(frac);
  out.append(4 - frac_text.size(), '0');
  out += frac_text;
  return out;
}

Decimal Decimal::mul_int(std::int64_t n) const {
  const __int128 wide = static_cast<__int128>(raw_) * n;
  if (wide > static_cast<__int128>(INT64_MAX) ||
      wide < static_cast<__int128>(INT64_MIN)) {
    throw std::overflow_error("decimal multiplication overflow");
  }
  return Decimal(static_cast<std::int64_t>(wide));
}

Decimal Decimal::scale_by(double factor) const {
  const double scaled = static_cast<double>(raw_) * factor;
  if (!std::isfinite(scaled) ||
      scaled >= 9.2233720368547758e18 || scaled <= -9.2233720368547758e18) {
    throw std::overflow_error("decimal scale overflow");
  }
  return Decimal(static_cast<std::int64_t>(std::llround(scaled)));
}

}  // namespace agentsim
