#pragma once

#include <cstdint>
#include <random>

namespace dfamin {

// All randomized code in this library uses std::mt19937_64, whose output
// sequence is fixed by the C++ standard, so a seed reproduces the same
// results on every platform. std::uniform_int_distribution is NOT portable
// across standard libraries, hence the hand-rolled draw below.
using Rng = std::mt19937_64;

// Exactly uniform draw from [0, n) by rejection.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

} // namespace dfamin
