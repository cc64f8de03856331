#pragma once

#include <cstdint>
#include <random>

namespace mcb {

/// splitmix64 mixing step; used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t salt = 0) {
  return mix64(mix64(mix64(master) ^ stream) ^ (salt * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
}

/// RNG for substream `stream` of a master seed. Streams are independent of
/// each other and of evaluation order, which keeps parallel runs reproducible.
inline std::mt19937_64 substream(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t salt = 0) {
  return std::mt19937_64(derive_seed(master, stream, salt));
}

}  // namespace mcb
