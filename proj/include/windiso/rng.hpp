#pragma once

#include <cstdint>

namespace windiso {

/// splitmix64: tiny, fast, and stable across platforms. Every randomized
/// artifact in this project (curve families, sample streams) derives from it
/// so results are reproducible from a single integer seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound > 0. Rejection-free modulo bias is
    /// irrelevant here (bounds are tiny against 2^64) but kept exactish by
    /// multiply-shift.
    std::uint64_t next_below(std::uint64_t bound) {
        // Lemire multiply-shift reduction.
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

}  // namespace windiso
