#pragma once

#include <cstdint>
#include <random>

namespace drawers {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of replication `run_index` under `master_seed`. Each replication gets
/// its own stream, so runs can execute in any order or concurrently.
constexpr std::uint64_t run_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
  return splitmix64(master_seed ^ splitmix64(run_index));
}

/// Tie-break generator: std::mt19937_64, whose output sequence is fixed by the
/// standard, plus a bounded draw by rejection so results do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      ++draws_;
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  /// Number of raw 64-bit outputs consumed so far.
  std::uint64_t draws() const noexcept { return draws_; }

private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace drawers
