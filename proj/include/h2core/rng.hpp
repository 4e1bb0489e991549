#pragma once

#include <cstdint>

namespace h2core {

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Small deterministic generator (splitmix64 sequence). One instance per
// logical stream; derive streams with substream() so results never depend
// on thread scheduling.
class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n), unbiased. n must be nonzero.
  std::uint64_t next_below(std::uint64_t n) noexcept {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

// Stream keyed by (master, a, b); e.g. (seed, node, run) for a Monte Carlo
// run or (seed, start_node) for a crawl.
inline Rng substream(std::uint64_t master, std::uint64_t a,
                     std::uint64_t b = 0) noexcept {
  std::uint64_t s = mix64(master);
  s = mix64(s ^ mix64(a ^ 0x9e3779b97f4a7c15ULL));
  s = mix64(s ^ mix64(b ^ 0xd1b54a32d192ed03ULL));
  return Rng(s);
}

}  // namespace h2core
