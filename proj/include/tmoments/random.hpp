#pragma once

#include <cstdint>
#include <limits>

namespace tmoments {

/// SplitMix64: a counter-based 64-bit generator. Each output is a bijective
/// mix of `seed + k * golden_gamma`, so streams are reproducible on every
/// platform. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept;

    /// Uniform double in the open interval (0, 1), 53 bits of resolution.
    double uniform() noexcept;

    /// Independent child stream; advances this generator by one step.
    SplitMix64 split() noexcept;

    /// Child stream keyed by `key` without touching this generator's state.
    SplitMix64 fork(std::uint64_t key) const noexcept;

private:
    std::uint64_t state_;
};

// Standard normal variate (Marsaglia polar method).
double draw_normal(SplitMix64& rng) noexcept;

// Gamma(shape, 1) variate (Marsaglia-Tsang; boosted for shape < 1).
double draw_gamma(SplitMix64& rng, double shape) noexcept;

// Standard Student's t variate with nu degrees of freedom:
// Z / sqrt(V / nu) with Z ~ N(0,1), V ~ chi-square(nu).
double draw_standard_t(SplitMix64& rng, double nu) noexcept;

}  // namespace tmoments
