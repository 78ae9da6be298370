// signals.hpp — test inputs: steps, seeded bounded noise, signal arithmetic.

#pragma once

#include "glfrac/gl_engine.hpp"

#include <cstdint>

namespace glfrac {

/// SplitMix64: tiny, fully constant-specified generator, so noise sequences
/// reproduce bit-for-bit anywhere.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(next()) * 0x1.0p-64; }
};

struct NoiseSpec {
    double e_max = 0.0;     // amplitude bound, > 0
    std::uint64_t seed = 0;
    std::size_t count = 0;  // >= 1
    double h = 1.0;         // grid step of the produced signal
};

/// All-ones signal of floor(duration/h)+1 samples.
SampledSignal unit_step(double duration, double h);

/// count samples in [-e_max, e_max], sample = (2u - 1) * e_max from SplitMix64.
SampledSignal uniform_noise(const NoiseSpec& spec);

/// Pointwise sum; grids must match exactly.
SampledSignal add(const SampledSignal& a, const SampledSignal& b);

} // namespace glfrac
