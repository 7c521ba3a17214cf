#pragma once
// Exhaustive bounded-diameter enumeration of MSTD sets up to affine
// equivalence, representation-count filtering, and MSTD density estimation
// over random subsets of {0..n}.

#include <cstdint>
#include <optional>
#include <vector>

#include "mstd/core_sets.hpp"

namespace mstd {

struct SearchConfig {
    int64_t set_size = 2;
    int64_t max_diameter = 1;              // bound on max(A) for normalized A
    std::optional<int64_t> rep_threshold;  // keep sets where some sum has >= r ordered reps
    int64_t parallelism = 0;               // 0 = MSTD_WORKERS env or all cores
    int64_t resource_cap = 1'000'000'000;  // max candidate sets before erroring out
};

struct SearchOutcome {
    std::vector<IntSet> canonical_reps; // deduplicated canonical forms, lex-sorted
    int64_t enumerated_count = 0;       // normalized (gcd 1) sets visited
    double elapsed_seconds = 0.0;
};

// rep_count(A, x) — ordered pairs summing to x — lives in core_sets.hpp and
// drives the rep_threshold filter here.

// Visits every normalized set (min 0, gcd 1) of the given size with
// max <= max_diameter; returns canonical forms of the MSTD ones surviving
// the rep filter. Deterministic output independent of worker count.
SearchOutcome enumerate_mstd(const SearchConfig& config);

// Size-9 search with rep_threshold 4; covers the full nine affine classes
// once max_diameter >= 25.
SearchOutcome classify_size9_4rep(int64_t max_diameter, int64_t parallelism = 0);

struct DensityResult {
    int64_t n = 0;
    bool exhaustive = false;
    int64_t total = 0;      // subsets examined (2^{n+1} when exhaustive)
    int64_t mstd_count = 0;
    double estimate = 0.0;
    double wilson_low = 0.0;  // equal to estimate in exhaustive mode
    double wilson_high = 0.0;
};

// Fraction of subsets of {0..n} that are MSTD (empty set counts as not
// MSTD). samples = nullopt iterates all 2^{n+1} subsets (n <= 24); otherwise
// draws that many subsets, each element kept with probability 1/2 (n <= 62).
DensityResult mstd_density(int64_t n, std::optional<int64_t> samples, uint64_t seed,
                           int64_t parallelism = 0);

} // namespace mstd
