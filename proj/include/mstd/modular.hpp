#pragma once
// Reduction of integer sets modulo n, sum/difference profiles inside Z/nZ,
// and the delta-boosting replication A -> A ∪ (A+n) for reducible sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "mstd/core_sets.hpp"

namespace mstd {

// Residues sorted ascending, all in [0, modulus).
struct CyclicSet {
    int64_t modulus = 1;
    std::vector<int64_t> residues;
};

struct ReductionReport {
    int64_t n = 0;        // modulus
    bool reducible = false;
    int64_t sum = 0;      // |A' + A'| in Z/nZ
    int64_t diff = 0;     // |A' - A'| in Z/nZ
    int64_t f_mod = 0;    // sum - diff
    bool good = false;    // reducible and f_mod >= 1
};

// A' = A ∩ [0, n) taken as residues. Requires A normalized, 1 <= n <= 2^20.
CyclicSet reduce_mod(const IntSet& a, int64_t n);

// True iff A equals the lift of its residues over [0, max(A)]:
// A = {x in [0, max] : x mod n in A'}.
bool is_reducible(const IntSet& a, int64_t n);

struct CyclicProfile {
    int64_t sum_size = 0;
    int64_t diff_size = 0;
    int64_t f_mod = 0; // sum_size - diff_size
};

CyclicProfile cyclic_profile(const CyclicSet& s);

ReductionReport reduction_report(const IntSet& a, int64_t n);

// A ∪ (A+n) ∪ ... ∪ (A+(t-1)n), built by t-1 doubling steps, each of which
// requires the current set to still be reducible mod n (throws otherwise).
IntSet replicate(const IntSet& a, int64_t n, int64_t t);

// Reports for every modulus in [1, n_max] that is reducible with f_mod >= 1.
// n_max defaults to 2*max(A)+1.
std::vector<ReductionReport> good_reduction_search(const IntSet& a,
                                                   std::optional<int64_t> n_max = std::nullopt);

} // namespace mstd
