#pragma once

#include <cstdint>

namespace fx {

/// splitmix64: counter-based generator with a fixed finalizer, so every
/// platform produces the identical stream for a given seed.
struct SplitMix64 {
    std::uint64_t state = 0;

    constexpr std::uint64_t next() noexcept {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) built from the top 53 bits.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

/// Deterministic bit source: 64-bit words consumed most significant bit
/// first.
struct BitSource {
    SplitMix64 rng;
    std::uint64_t word = 0;
    int remaining = 0;

    explicit constexpr BitSource(std::uint64_t seed) noexcept : rng{seed} {}

    std::uint8_t next_bit() noexcept {
        if (remaining == 0) {
            word = rng.next();
            remaining = 64;
        }
        --remaining;
        return static_cast<std::uint8_t>((word >> remaining) & 1u);
    }
};

} // namespace fx
