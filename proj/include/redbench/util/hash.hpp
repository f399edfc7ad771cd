#pragma once

#include <cstdint>
#include <string_view>

namespace redbench::util {

// FNV-1a: stable across platforms and standard libraries, unlike std::hash.
inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ull) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Per-sample seed derivation: a resumed run must draw the same randomness for
// a sample as the original run regardless of execution order.
inline uint64_t derive_seed(uint64_t global_seed, std::string_view sample_id) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (int i = 0; i < 8; ++i) {
    h ^= (global_seed >> (8 * i)) & 0xff;
    h *= 0x100000001b3ull;
  }
  return fnv1a64(sample_id, h);
}

}  // namespace redbench::util
