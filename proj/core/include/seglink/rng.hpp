#pragma once

#include <cstdint>

namespace seglink {

/// SplitMix64: tiny 64-bit generator used for reproducible verification
/// sweeps. The full state is the seed, so a run is identified by one number.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// -1 or +1.
    double sign() { return (next() & 1u) ? 1.0 : -1.0; }
};

}  // namespace seglink
