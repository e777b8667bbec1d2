#pragma once

#include <cstdint>

namespace matchlab {

// 64-bit finalizer used for seed mixing (SplitMix64 output function).
inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Counter-based generator: state advances by the golden-ratio increment,
// outputs are mix64 of the counter. Streams with distinct seeds occupy
// distinct counter phases.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Uniform in [0, bound), unbiased via rejection of the wrap-around range.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // True with probability 1/denominator (exact, no floating point).
  bool one_in(std::uint64_t denominator) { return next_below(denominator) == 0; }

 private:
  std::uint64_t state_;
};

// Seed for trial i of a run keyed by master_seed. Pinned scheme: both the
// trial index and the master seed pass through mix64 so that nearby indices
// and nearby master seeds map to unrelated streams.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
  return mix64(master_seed ^ mix64(trial));
}

// Sub-stream seed within one trial (profile generation, lazy run, ...).
// Tags live in a domain disjoint from trial indices via the high bit.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream_tag) {
  return mix64(seed ^ mix64(stream_tag | 0x8000000000000000ull));
}

namespace stream_tag {
inline constexpr std::uint64_t kProfile = 0;
inline constexpr std::uint64_t kLazy = 1;
inline constexpr std::uint64_t kOrderPolicy = 2;
}  // namespace stream_tag

}  // namespace matchlab
