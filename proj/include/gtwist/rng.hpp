#pragma once

#include <cstdint>
#include <random>

namespace gtwist {

// Deterministic RNG used by all generators.  mt19937_64's output sequence is
// fixed by the standard and the uniform draw below avoids the
// implementation-defined std::uniform_int_distribution, so identical seeds
// give identical instances everywhere.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t u64() { return eng(); }

    // Uniform in [lo, hi] inclusive (modulo bias is negligible for our spans).
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(eng() % (static_cast<std::uint64_t>(hi - lo) + 1));
    }
};

}  // namespace gtwist
