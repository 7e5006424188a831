#pragma once

#include <cstdint>
#include <string_view>

namespace dualnorm {

/// splitmix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed for draw k of a named stream. Streams with different names, or
/// different k, get unrelated seeds regardless of evaluation order.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::string_view stream, std::uint64_t k) {
  return splitmix64(splitmix64(seed ^ fnv1a(stream)) + k);
}

}  // namespace dualnorm
