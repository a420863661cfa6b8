#include "agentsim/hash.hpp"

#include <stdexcept>

namespace agentsim {

std::string to_hex16(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::uint64_t from_hex16(std::string_view text) {
  if (text.size() != 16) {
    throw std::invalid_argument("expected 16 hex digits");
  }
  std::uint64_t value = 0;
  for (char c : text) {
    value <<= 4;
    if (c >= '0' && c <= '9') {
      value |= static_cast<std::uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      value |= static_cast<std::uint64_t>(c - 'a' + 10);
    } else {
      throw std::invalid_argument("bad hex digit");
    }
  }
  return value;
}

}  // namespace agentsim
