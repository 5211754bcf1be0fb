#ifndef UECSP_RNG_HPP
#define UECSP_RNG_HPP

#include <cstdint>

namespace uecsp {

// SplitMix64: 64-bit counter-based generator (state advances by the
// golden-ratio increment, output is a finalizing mix of the state).
// Every output is a pure function of (seed, draw index), so instance
// generation is reproducible across platforms and compilers.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  static uint64_t mix(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in {0, ..., bound-1}, unbiased via rejection
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // uniform in [0, 1) with 53 random bits
  double u01() { return (next() >> 11) * 0x1.0p-53; }

  uint64_t state() const { return state_; }

private:
  uint64_t state_;
};

// derived stream for trial-parallel harnesses: seed XOR index, mixed
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  return SplitMix64::mix(seed ^ index);
}

} // namespace uecsp

#endif
