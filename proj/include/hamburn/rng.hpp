#pragma once

#include <cstdint>

namespace hamburn {

// Deterministic and platform-independent. All randomized entry points take an
// explicit seed and derive per-trial streams, so reruns and worker counts never
// change results.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
};

inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  g.next();
  return g;
}

}  // namespace hamburn
