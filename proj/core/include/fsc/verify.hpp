#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fsc {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // first mismatch, empty when passed
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

/// Exhaustive desk-scale certification against the brute-force oracles:
/// 2-matching maximality, both cover minima and the refined joint minimum
/// over every labeled graph with up to `max_n` vertices (capped at 6).
VerifyReport verify_small_exhaustive(int max_n = 5);

/// Seeded random cross-checks: matching maximality, cover minima, schedule
/// feasibility and the makespan identity.
VerifyReport verify_random(std::uint64_t seed, int rounds = 200);

/// Seeded ratio certification: unit solvers against the brute optimum and
/// the two-clique solver against its lower bound.
VerifyReport verify_ratios(std::uint64_t seed, int rounds = 200);

}  // namespace fsc
