#pragma once
// Counter-based deterministic RNG (SplitMix64 finalizer). Every random
// decision is a pure function of (seed, counter...), so sampling results do
// not depend on how work is partitioned across threads.

#include <cstdint>

namespace mstd::rng {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent 64-bit value for one (seed, counter) pair.
inline uint64_t at(uint64_t seed, uint64_t counter) {
    return splitmix64(seed ^ splitmix64(counter));
}

// Per-sample sub-seed; a sample then draws its own counters from 0.
inline uint64_t subseed(uint64_t seed, uint64_t sample_index) {
    return splitmix64(seed + 0x632BE59BD9B4E019ull * (sample_index + 1));
}

// Fair coin for one (seed, counter) pair (top bit of the mixed word).
inline bool coin(uint64_t seed, uint64_t counter) {
    return at(seed, counter) >> 63;
}

} // namespace mstd::rng
