#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace spinnet {

// splitmix64 finalizer; spreads low-entropy inputs over 64 bits.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for the generator owned by (stream_a, stream_b) under a run seed.
// The GA derives per-individual streams from (seed, generation, slot) so
// evaluation order and parallelism cannot change a run's random sequence.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream_a,
                                        std::uint64_t stream_b) {
    return mix64(seed ^ mix64(stream_a ^ mix64(stream_b)));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Uniform integer in [0, bound), unbiased via rejection. Implemented directly
// on the mt19937_64 output stream: std::uniform_int_distribution is
// implementation-defined, which would break cross-platform golden values.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    // 2^64 mod bound, computed without overflow.
    const std::uint64_t rem = (max % bound + 1) % bound;
    const std::uint64_t cutoff = max - rem;
    std::uint64_t x = rng();
    while (x > cutoff) x = rng();
    return x % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

inline bool bernoulli(std::mt19937_64& rng, double prob) {
    return uniform_unit(rng) < prob;
}

}  // namespace spinnet
