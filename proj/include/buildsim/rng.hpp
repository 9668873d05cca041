// Seeded 64-bit generator and per-trial seed derivation.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded integers and doubles are produced here rather than through
// <random> distributions, whose algorithms are implementation-defined, so a
// given seed yields the same stream on every conforming toolchain.
#pragma once

#include <cstdint>
#include <random>

namespace buildsim {

/// SplitMix64 finalizer. Used to decorrelate seeds, never as a stream.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of trial `index` under `master_seed`:
///   mix64(mix64(master_seed) ^ (index * 0xD1B54A32D192ED03))
constexpr std::uint64_t trial_seed(std::uint64_t master_seed,
                                   std::uint64_t index) noexcept {
  return mix64(mix64(master_seed) ^ (index * 0xD1B54A32D192ED03ULL));
}

/// Derives an independent sub-stream seed (e.g. strategy-owned randomness).
constexpr std::uint64_t substream_seed(std::uint64_t seed,
                                       std::uint64_t stream_id) noexcept {
  return mix64(seed ^ mix64(stream_id + 0x632BE59BD9B4E019ULL));
}

__extension__ using uint128 = unsigned __int128;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  /// Lemire's multiply-and-reject; exact, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    uint128 m = static_cast<uint128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<uint128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace buildsim
