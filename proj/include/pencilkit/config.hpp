#pragma once

#include <cstdint>

namespace pk {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026ULL;
inline constexpr int kDefaultDegreeBound = 24;

/// Knobs shared by every operation that factors or picks random data.
struct Config {
  int degree_bound = kDefaultDegreeBound;
  std::uint64_t seed = kDefaultSeed;
};

}  // namespace pk
