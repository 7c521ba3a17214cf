#pragma once
// Fringe machinery for hitting an exact deficiency pair (j, k): sets
// A ⊆ [0,n] with |A+A| = (2n+1)-j and |A-A| = (2n+1)-2k, plus Monte Carlo
// estimation of how often a random middle fill still hits the pair.

#include <cstdint>
#include <vector>

#include "mstd/core_sets.hpp"

namespace mstd {

enum class CaseTag { CaseI, CaseII };

// Lower fringe L, upper fringe given as offsets o with n-o in the set, and
// the exceptional values x_1 < ... (only used by CaseII; for k = 0 the list
// belongs to the underlying depth-(j+2) recursion, so it has j+2 entries).
struct FringePair {
    std::vector<int64_t> lower;
    std::vector<int64_t> upper_offsets;
    int64_t fringe_radius = 0; // 4*m_k (CaseI) or 2*m_j (CaseII)
    CaseTag case_tag = CaseTag::CaseI;
    std::vector<int64_t> x_list;
};

struct DeficiencyTarget {
    int64_t j = 0; // missing sums
    int64_t k = 0; // missing difference pairs
    int64_t n = 0; // ambient maximum
};

enum class FillKind { Full, Random };

struct TargetCertificate {
    bool verified = false;
    std::vector<int64_t> missing_sums;  // [0, 2n] \ (A+A)
    std::vector<int64_t> missing_diffs; // positive differences absent from A-A
};

struct EstimateResult {
    double point = 0.0;
    double wilson_low = 0.0;
    double wilson_high = 0.0;
    int64_t hits = 0;
    int64_t samples = 0;
};

// Block stack X_k = union of k translates of the 11-element base block by 12;
// max element 12k+5, X_k+X_k = [0, 2(12k+5)], difference set misses exactly
// the multiples-of-12-plus-6 up to 12k-6. Requires k >= 1.
IntSet case1_Xk(int64_t k);

// X_k with the j elements {12(k-t)+1 : 0 <= t < j} removed; difference set
// unchanged. Requires 0 <= j <= k, k >= 1.
IntSet case1_Xjk(int64_t j, int64_t k);

struct CaseIIFringe {
    std::vector<int64_t> elements; // L_j; empty for j = 0
    int64_t m = -1;                // 7*3^j - 8
};

// Recursive fringe L_j with |L_j| = (7/2)(3^j - 1) + 2j and
// L_j + L_j = [0, 2m_j] minus exactly {2(m_t + 5) : t < j}. j >= 0.
CaseIIFringe case2_Lj(int64_t j);

// x_t = m_{t-1} + 5 for t = 1..j.
std::vector<int64_t> case2_x_list(int64_t j);

// Smallest ambient n accepted for the pair (j, k).
int64_t minimum_n(int64_t j, int64_t k);

// The fringes used for (j, k); (0,0) yields empty fringes.
FringePair fringe_pair(int64_t j, int64_t k);

// L ⊔ middle ⊔ (n - offsets); Full takes the whole middle interval, Random
// keeps each middle element independently with probability 1/2 (seeded,
// counter-based, bit-reproducible). Throws if n is below the case minimum.
IntSet assemble_Ajk(const DeficiencyTarget& target, FillKind fill, uint64_t seed = 0);

// Checks |A+A| = (2n+1)-j and |A-A| = (2n+1)-2k over the ambient [0,2n] /
// [-n,n]; the certificate always lists whatever sums/positive differences
// are missing. Requires max(A) <= n.
TargetCertificate verify_target(const IntSet& a, const DeficiencyTarget& target);

// Fraction of Random fills that hit the target exactly, with a 95% Wilson
// score interval. Deterministic given the seed, independent of worker count.
EstimateResult estimate_cjk(int64_t j, int64_t k, int64_t n, int64_t samples, uint64_t seed);

} // namespace mstd
