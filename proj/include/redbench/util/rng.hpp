#pragma once

#include <cstdint>
#include <random>

namespace redbench::util {

using Rng = std::mt19937_64;

inline size_t pick_index(Rng& rng, size_t n) {
  return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

inline double pick_unit(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace redbench::util
