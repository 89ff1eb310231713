#pragma once

#include <cstdint>

namespace spinlab {

/// xorshift64* stream generator (Marsaglia shift-register family, Vigna's
/// scrambling multiplier). Shifts 12/25/27, multiplier 0x2545F4914F6CDD1D.
/// Self-contained so that reports reproduce bit-for-bit across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Nonzero variant, for coefficients that must not vanish.
    std::int64_t uniform_int_nonzero(std::int64_t lo, std::int64_t hi) {
        for (;;) {
            const std::int64_t v = uniform_int(lo, hi);
            if (v != 0) return v;
        }
    }

  private:
    std::uint64_t state_;
};

/// SplitMix64 finalizer (Steele/Lea/Flood constants). Used to derive
/// independent sub-seeds: mixing (seed, index) this way means adding a case
/// to the end of a registry never perturbs the streams of earlier cases.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace spinlab
