#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace agentsim {

/// Fixed-point decimal with exactly four fractional digits, stored as a
/// scaled 64-bit integer. All money and price values in the harness use
/// this type so that ledger arithmetic is exact — no binary-float drift.
class Decimal {
 public:
  static constexpr std::int64_t kScale = 10000;

  constexpr Decimal() = default;

  static constexpr Decimal from_raw(std::int64_t raw) { return Decimal(raw); }
  static constexpr Decimal from_int(std::int64_t units) {
    return Decimal(units * kScale);
  }
  /// Rounds to the nearest representable value, ties away from zero.
  static Decimal from_double(double value);
  /// Parses "[-]digits[.digits]" with at most four fractional digits.
  /// Throws std::invalid_argument on anything else.
  static Decimal from_string(std::string_view text);

  constexpr std::int64_t raw() const { return raw_; }
  double to_double() const { return static_cast<double>(raw_) / kScale; }
  /// Canonical rendering: minus sign, integer digits, '.', exactly four
  /// fractional digits. Negative zero normalizes to "0.0000".
  std::string to_string() const;

  constexpr Decimal operator-() const { return Decimal(-raw_); }
  constexpr Decimal operator+(Decimal o) const { return Decimal(raw_ + o.raw_); }
  constexpr Decimal operator-(Decimal o) const { return Decimal(raw_ - o.raw_); }
  Decimal& operator+=(Decimal o) {
    raw_ += o.raw_;
    return *this;
  }
  Decimal& operator-=(Decimal o) {
    raw_ -= o.raw_;
    return *this;
  }

  /// Exact product with an integer count (price * quantity). Throws
  /// std::overflow_error if the result leaves the 64-bit range.
  Decimal mul_int(std::int64_t n) const;

  /// Multiplies by a double factor and rounds once to four digits.
  /// This is the single rounding step of the price process.
  Decimal scale_by(double factor) const;

  constexpr bool is_zero() const { return raw_ == 0; }
  constexpr bool is_negative() const { return raw_ < 0; }

  friend constexpr auto operator<=>(Decimal, Decimal) = default;

 private:
  constexpr explicit Decimal(std::int64_t raw) : raw_(raw) {}
  std::int64_t raw_ = 0;
};

}  // namespace agentsim
