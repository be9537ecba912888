#pragma once

#include <cstdint>

namespace qecc {

/// SplitMix64 finalizer; full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Small deterministic generator (SplitMix64). Identical output on every
/// platform, unlike the standard <random> distributions.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        return mix64(z);
    }

    /// Unbiased uniform draw from [0, n), n > 0. Rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Stream for one Monte Carlo trial. Keyed by (seed, trial) through a full
/// mix so distinct trials land on unrelated orbit positions; results are
/// therefore independent of trial execution order and worker count.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ULL) ^
                      mix64(trial * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL));
}

}  // namespace qecc
