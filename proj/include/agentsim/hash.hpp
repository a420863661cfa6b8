#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace agentsim {

// FNV-1a, 64-bit. Used for state hashes and config digests; the exact
// constants are part of the transcript format and must not change.
inline constexpr std::uint64_t kFnvOffsetBasis = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x00000100000001b3ull;

constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t seed = kFnvOffsetBasis) noexcept {
  std::uint64_t h = seed;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= kFnvPrime;
  }
  return h;
}

std::string to_hex16(std::uint64_t value);
std::uint64_t from_hex16(std::string_view text);

}  // namespace agentsim
