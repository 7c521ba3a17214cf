#include "mstd/modular.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mstd {

namespace {

constexpr int64_t kMaxModulus = int64_t{1} << 20;

void check_modulus(int64_t n) {
    if (n < 1) throw validation_error("modulus must be positive");
    if (n > kMaxModulus) throw validation_error("modulus above supported limit 2^20");
}

} // namespace

CyclicSet reduce_mod(const IntSet& a, int64_t n) {
    check_modulus(n);
    if (normalize(a) != a) throw validation_error("reduce_mod: set must be normalized");
    CyclicSet s;
    s.modulus = n;
    for (int64_t x : a.elements()) {
        if (x < n) s.residues.push_back(x);
    }
    return s;
}

bool is_reducible(const IntSet& a, int64_t n) {
    check_modulus(n);
    std::vector<char> residue(static_cast<size_t>(n), 0);
    for (int64_t x : a.elements())
        if (x < n) residue[static_cast<size_t>(x)] = 1;
    size_t i = 0;
    const auto& elems = a.elements();
    for (int64_t x = a.min(); x <= a.max(); ++x) {
        bool in_lift = residue[static_cast<size_t>(x % n)] != 0;
        bool in_set = i < elems.size() && elems[i] == x;
        if (in_set) ++i;
        if (in_lift != in_set) return false;
    }
    return true;
}

CyclicProfile cyclic_profile(const CyclicSet& s) {
    check_modulus(s.modulus);
    if (s.residues.empty()) throw validation_error("cyclic_profile: empty residue set");
    const int64_t n = s.modulus;

    // Integer supports first, then fold index i >= n back onto i - n.
    auto sums = bits::sum_bits(s.residues, n - 1);   // covers [0, 2n-2]
    auto diffs = bits::diff_bits(s.residues, n - 1); // covers [0, n-1]

    std::vector<uint64_t> csum((static_cast<size_t>(n) + 63) / 64, 0);
    std::vector<uint64_t> cdiff((static_cast<size_t>(n) + 63) / 64, 0);
    auto set_bit = [](std::vector<uint64_t>& w, int64_t i) {
        w[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
    };
    auto get_bit = [](const std::vector<uint64_t>& w, int64_t i) {
        size_t word = static_cast<size_t>(i) >> 6;
        return word < w.size() && ((w[word] >> (i & 63)) & 1) != 0;
    };
    for (int64_t i = 0; i <= 2 * (n - 1); ++i)
        if (get_bit(sums, i)) set_bit(csum, i % n);
    for (int64_t i = 0; i <= n - 1; ++i) {
        if (get_bit(diffs, i)) {
            set_bit(cdiff, i);
            set_bit(cdiff, (n - i) % n);
        }
    }

    CyclicProfile p;
    p.sum_size = bits::popcount(csum);
    p.diff_size = bits::popcount(cdiff);
    p.f_mod = p.sum_size - p.diff_size;
    return p;
}

ReductionReport reduction_report(const IntSet& a, int64_t n) {
    ReductionReport r;
    r.n = n;
    r.reducible = is_reducible(a, n);
    CyclicProfile p = cyclic_profile(reduce_mod(a, n));
    r.sum = p.sum_size;
    r.diff = p.diff_size;
    r.f_mod = p.f_mod;
    r.good = r.reducible && r.f_mod >= 1;
    return r;
}

IntSet replicate(const IntSet& a, int64_t n, int64_t t) {
    check_modulus(n);
    if (t < 1) throw validation_error("replicate: count must be >= 1");
    if (static_cast<__int128>(a.size()) * t > 50'000'000)
        throw resource_limit_error("replicate: result would be too large");

    std::vector<int64_t> cur = a.elements();
    for (int64_t step = 1; step < t; ++step) {
        IntSet b(cur);
        if (!is_reducible(b, n))
            throw validation_error("replicate: set is not reducible modulo n");
        std::vector<int64_t> merged;
        merged.reserve(cur.size() * 2);
        // Union of cur and cur+n; both sorted, n > 0 keeps the merge simple.
        size_t i = 0, j = 0;
        while (i < cur.size() || j < cur.size()) {
            int64_t left = i < cur.size() ? cur[i] : INT64_MAX;
            int64_t right = j < cur.size() ? cur[j] + n : INT64_MAX;
            if (left < right) {
                merged.push_back(left);
                ++i;
            } else if (right < left) {
                merged.push_back(right);
                ++j;
            } else {
                merged.push_back(left);
                ++i;
                ++j;
            }
        }
        cur = std::move(merged);
    }
    return IntSet(cur);
}

std::vector<ReductionReport> good_reduction_search(const IntSet& a,
                                                   std::optional<int64_t> n_max_opt) {
    const int64_t n_max = n_max_opt.value_or(2 * a.max() + 1);
    if (n_max < 1) throw validation_error("good_reduction_search: empty modulus range");
    check_modulus(n_max);
    if (normalize(a) != a) throw validation_error("good_reduction_search: set must be normalized");

    std::vector<ReductionReport> all(static_cast<size_t>(n_max));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t n = 1; n <= n_max; ++n)
        all[static_cast<size_t>(n - 1)] = reduction_report(a, n);

    std::vector<ReductionReport> good;
    for (const auto& r : all)
        if (r.good) good.push_back(r);
    return good;
}

} // namespace mstd
