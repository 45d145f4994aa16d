// Shared small utilities: 128-bit ints, the seeded RNG, bit helpers.
#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace signcount {

using u128 = unsigned __int128;
using i128 = __int128;

// splitmix64: the single RNG behind every randomized feature. Identical
// seeds must give identical streams on any platform, so no std distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  int pm_one() { return (next() & 1) ? -1 : +1; }

  static constexpr const char* name() { return "splitmix64"; }

 private:
  std::uint64_t state_;
};

inline int popcount_parity_sign(std::uint64_t bits) {
  return (std::popcount(bits) & 1) ? -1 : +1;
}

}  // namespace signcount
