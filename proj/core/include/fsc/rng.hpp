#pragma once

#include <cstdint>

namespace fsc {

/// SplitMix64 generator. Used instead of <random> engines so that seeded
/// instance generation and test sweeps produce identical bytes on every
/// platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound), bound >= 1. Modulo reduction; the
    /// bias is negligible for desk-scale bounds.
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform real in [0, 1) with 53 bits of precision.
    double next_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace fsc
