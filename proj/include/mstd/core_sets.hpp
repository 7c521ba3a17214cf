#pragma once
// Exact finite-set arithmetic for MSTD analysis: sumsets, difference sets,
// normalization, affine canonical forms, symmetry reports and the f(A) ratio.
//
// IntSet is the universal operand: a non-empty, strictly increasing sequence
// of non-negative 64-bit integers. The arithmetic kernels are dense-bitset
// based (word-parallel shift-OR); they are cross-checked against the naive
// double-loop implementation in reference.hpp by the property suite.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstd {

// Thrown for parameter-domain violations and malformed inputs (CLI exit 2).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a configurable resource cap is exceeded (CLI exit 3).
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IntSet {
  public:
    // Accepts elements in any order; rejects empty input, negatives and
    // duplicates. The empty set has no profile, so it is refused up front.
    explicit IntSet(std::vector<int64_t> elems);

    const std::vector<int64_t>& elements() const { return elems_; }
    int64_t size() const { return static_cast<int64_t>(elems_.size()); }
    int64_t min() const { return elems_.front(); }
    int64_t max() const { return elems_.back(); }
    int64_t diameter() const { return max() - min(); }
    bool contains(int64_t x) const;

    bool operator==(const IntSet& o) const { return elems_ == o.elems_; }
    bool operator!=(const IntSet& o) const { return elems_ != o.elems_; }
    // Lexicographic on the element sequence (canonical_form tie-breaking).
    bool operator<(const IntSet& o) const { return elems_ < o.elems_; }

  private:
    std::vector<int64_t> elems_;
};

struct SumDiffProfile {
    int64_t sum_size;                   // |A+A|
    int64_t diff_size;                  // |A-A|, always odd
    int64_t delta;                      // |A+A| - |A-A|
    std::optional<double> f_ratio;      // ln|A+A| / ln|A-A|; absent for singletons
    bool is_mstd;                       // delta > 0
    std::vector<int64_t> missing_sums;  // in [2*min, 2*max] but not in A+A
    std::vector<int64_t> missing_diffs; // in [0, diameter] but not in A-A
};

struct SymmetryReport {
    bool is_symmetric;                      // A = {x} - A for some x
    std::optional<int64_t> center_doubled;  // that x, when symmetric
    int64_t s_value;                        // size of a maximum symmetric subset
    int64_t witness_center;                 // c maximizing |A ∩ (c-A)|, smallest on ties
    IntSet witness_subset;                  // realizes s_value, symmetric about witness_center/2
};

// (A - min A) / gcd; singletons map to {0}.
IntSet normalize(const IntSet& a);

// Affine-class representative: the lexicographically smaller of normalize(A)
// and normalize(max A - A). Constant on {uA + v : u != 0}.
IntSet canonical_form(const IntSet& a);

// {a1 + a2 : a1, a2 in A}.
IntSet sumset(const IntSet& a);

// Non-negative half of A - A (the full set is this plus its reflection, so
// |A - A| = 2*|diffset_nonneg(A)| - 1).
IntSet diffset_nonneg(const IntSet& a);

SumDiffProfile profile(const IntSet& a);

// s_value = max over c in A+A of |A ∩ (c - A)|, ties broken by smallest c.
SymmetryReport symmetry_report(const IntSet& a);

// Number of ordered pairs (a1, a2) in A x A with a1 + a2 = x.
int64_t rep_count(const IntSet& a, int64_t x);

// Comma-separated decimal integers, optional whitespace, unsorted accepted,
// duplicates and negatives rejected. E.g. "0,2,3,4,7,11,12,14".
IntSet parse_set(const std::string& text);
std::string format_set(const IntSet& a);

// Elementwise u*A + v (u > 0); helper for affine-invariance checks.
IntSet affine_image(const IntSet& a, int64_t u, int64_t v);
// {max(A) - x : x in A}.
IntSet reflect(const IntSet& a);

namespace bits {
// Dense-bitset kernels over [0, max]; exposed for reuse by the search and
// modular layers. Bit i of the result marks membership of value i.
std::vector<uint64_t> mask_of(const std::vector<int64_t>& elems, int64_t universe_max);
// OR of (mask << e) over all elements: the sumset of `elems` as bits over
// [0, 2*universe_max].
std::vector<uint64_t> sum_bits(const std::vector<int64_t>& elems, int64_t universe_max);
// OR of (mask >> e): the non-negative differences as bits over [0, universe_max.]
std::vector<uint64_t> diff_bits(const std::vector<int64_t>& elems, int64_t universe_max);
int64_t popcount(const std::vector<uint64_t>& w);
std::vector<int64_t> members(const std::vector<uint64_t>& w, int64_t limit);
std::vector<int64_t> missing(const std::vector<uint64_t>& w, int64_t lo, int64_t hi);
} // namespace bits

} // namespace mstd
