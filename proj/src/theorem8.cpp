#include "mstd/theorem8.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mstd/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mstd {

namespace {

const std::vector<int64_t>& base_block() {
    // The 11-element block whose translates tile Case I fringes.
    static const std::vector<int64_t> block = {0, 1, 2, 4, 5, 9, 12, 13, 14, 16, 17};
    return block;
}

int64_t pow3(int64_t j) {
    int64_t p = 1;
    for (int64_t i = 0; i < j; ++i) {
        if (p > (int64_t{1} << 40)) throw validation_error("recursion depth too large");
        p *= 3;
    }
    return p;
}

int64_t case2_m(int64_t j) { return 7 * pow3(j) - 8; }

void require(bool ok, const char* what) {
    if (!ok) throw validation_error(what);
}

struct Assembly {
    FringePair fringe;
    int64_t middle_lo = 0; // open interval (middle_lo, middle_hi)
    int64_t middle_hi = 0;
};

Assembly assembly_for(const DeficiencyTarget& t) {
    require(t.j >= 0 && t.k >= 0, "deficiency counts must be non-negative");
    require(t.n >= minimum_n(t.j, t.k), "ambient n below the case minimum");
    Assembly a;
    a.fringe = fringe_pair(t.j, t.k);
    if (t.j == 0 && t.k == 0) {
        a.middle_lo = -1;
        a.middle_hi = t.n + 1;
    } else {
        const int64_t half = a.fringe.fringe_radius / 2; // 2*m_k or m_j
        a.middle_lo = half;
        a.middle_hi = t.n - half;
    }
    return a;
}

std::vector<int64_t> assemble_elements(const DeficiencyTarget& t, FillKind fill, uint64_t seed) {
    Assembly a = assembly_for(t);
    std::vector<int64_t> elems = a.fringe.lower;
    for (int64_t x = a.middle_lo + 1; x < a.middle_hi; ++x) {
        if (fill == FillKind::Full || rng::coin(seed, static_cast<uint64_t>(x)))
            elems.push_back(x);
    }
    for (int64_t o : a.fringe.upper_offsets) elems.push_back(t.n - o);
    std::sort(elems.begin(), elems.end());
    return elems;
}

} // namespace

IntSet case1_Xk(int64_t k) {
    require(k >= 1, "case1_Xk: need k >= 1");
    require(k <= 100000, "case1_Xk: k too large");
    std::vector<int64_t> elems;
    std::set<int64_t> seen;
    for (int64_t t = 0; t < k; ++t)
        for (int64_t b : base_block()) seen.insert(b + 12 * t);
    return IntSet(std::vector<int64_t>(seen.begin(), seen.end()));
}

IntSet case1_Xjk(int64_t j, int64_t k) {
    require(j >= 0, "case1_Xjk: need j >= 0");
    require(j <= k, "case1_Xjk: need j <= k");
    IntSet xk = case1_Xk(k);
    std::set<int64_t> s(xk.elements().begin(), xk.elements().end());
    for (int64_t t = 0; t < j; ++t) s.erase(12 * (k - t) + 1);
    return IntSet(std::vector<int64_t>(s.begin(), s.end()));
}

CaseIIFringe case2_Lj(int64_t j) {
    require(j >= 0, "case2_Lj: need j >= 0");
    require(j <= 20, "case2_Lj: recursion depth too large");
    CaseIIFringe f;
    f.m = -1;
    for (int64_t i = 0; i < j; ++i) {
        const int64_t base = f.m + 1;
        for (int64_t d : {int64_t{0}, int64_t{1}, int64_t{2}, int64_t{5}})
            f.elements.push_back(base + d);
        for (int64_t d = f.m + 10; d <= 2 * f.m + 15; ++d) f.elements.push_back(base + d);
        f.m = 3 * f.m + 16;
    }
    std::sort(f.elements.begin(), f.elements.end());
    return f;
}

std::vector<int64_t> case2_x_list(int64_t j) {
    std::vector<int64_t> xs;
    for (int64_t t = 1; t <= j; ++t) xs.push_back(case2_m(t - 1) + 5);
    return xs;
}

int64_t minimum_n(int64_t j, int64_t k) {
    require(j >= 0 && k >= 0, "deficiency counts must be non-negative");
    if (j == 0 && k == 0) return 0;
    if (k == 0) return 2 * case2_m(j + 2) + 1;       // Case II, k = 0 variant
    if (j <= k) return 4 * (12 * k + 5) + 1;         // Case I
    return 2 * case2_m(j) + 1;                       // Case II
}

FringePair fringe_pair(int64_t j, int64_t k) {
    require(j >= 0 && k >= 0, "deficiency counts must be non-negative");
    FringePair fp;
    if (j == 0 && k == 0) return fp;

    if (k >= 1 && j <= k) {
        const int64_t m = 12 * k + 5;
        IntSet xjk = case1_Xjk(j, k);
        IntSet xk = case1_Xk(k);
        for (int64_t x : xjk.elements()) fp.lower.push_back(m - x);
        for (int64_t x = m + 1; x <= 2 * m; ++x) fp.lower.push_back(x);
        fp.upper_offsets = xk.elements();
        for (int64_t x = m + 1; x <= 2 * m; ++x) fp.upper_offsets.push_back(x);
        fp.fringe_radius = 4 * m;
        fp.case_tag = CaseTag::CaseI;
    } else {
        // Case II; for k = 0 everything is built from the depth-(j+2) fringe.
        const int64_t depth = k == 0 ? j + 2 : j;
        CaseIIFringe lj = case2_Lj(depth);
        std::vector<int64_t> xs = case2_x_list(depth);
        fp.lower = lj.elements;
        if (k == 0) {
            fp.lower.push_back(xs[0]);
            for (int64_t t = 1; t <= j + 1; ++t)
                fp.lower.push_back(2 * xs[static_cast<size_t>(t)] - xs[static_cast<size_t>(t - 1)]);
        } else {
            for (int64_t t = 1; t <= j - k; ++t)
                fp.lower.push_back(2 * xs[static_cast<size_t>(t)] - xs[static_cast<size_t>(t - 1)]);
        }
        fp.upper_offsets = lj.elements;
        for (int64_t x : xs) fp.upper_offsets.push_back(x);
        fp.fringe_radius = 2 * lj.m;
        fp.case_tag = CaseTag::CaseII;
        fp.x_list = xs;
    }
    std::sort(fp.lower.begin(), fp.lower.end());
    std::sort(fp.upper_offsets.begin(), fp.upper_offsets.end());
    return fp;
}

IntSet assemble_Ajk(const DeficiencyTarget& target, FillKind fill, uint64_t seed) {
    std::vector<int64_t> elems = assemble_elements(target, fill, seed);
    if (elems.empty())
        throw validation_error("random fill drew the empty set; use another seed");
    return IntSet(elems);
}

TargetCertificate verify_target(const IntSet& a, const DeficiencyTarget& target) {
    require(target.n >= a.max(), "verify_target: ambient n below max(A)");
    const int64_t n = target.n;
    auto sums = bits::sum_bits(a.elements(), n);
    auto diffs = bits::diff_bits(a.elements(), n);

    TargetCertificate cert;
    cert.missing_sums = bits::missing(sums, 0, 2 * n);
    cert.missing_diffs = bits::missing(diffs, 1, n);
    cert.verified = static_cast<int64_t>(cert.missing_sums.size()) == target.j &&
                    static_cast<int64_t>(cert.missing_diffs.size()) == target.k;
    return cert;
}

EstimateResult estimate_cjk(int64_t j, int64_t k, int64_t n, int64_t samples, uint64_t seed) {
    require(samples >= 1, "estimate_cjk: need at least one sample");
    DeficiencyTarget target{j, k, n};
    assembly_for(target); // validates (j, k, n) up front

    int64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : hits)
#endif
    for (int64_t i = 0; i < samples; ++i) {
        std::vector<int64_t> elems =
            assemble_elements(target, FillKind::Random, rng::subseed(seed, static_cast<uint64_t>(i)));
        if (elems.empty()) continue; // possible only for (0,0); counts as a miss
        if (verify_target(IntSet(elems), target).verified) ++hits;
    }

    EstimateResult r;
    r.hits = hits;
    r.samples = samples;
    r.point = static_cast<double>(hits) / static_cast<double>(samples);
    const double z = 1.96, s = static_cast<double>(samples), p = r.point;
    const double denom = 1.0 + z * z / s;
    const double center = (p + z * z / (2 * s)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / s + z * z / (4 * s * s)) / denom;
    r.wilson_low = std::max(0.0, center - half);
    r.wilson_high = std::min(1.0, center + half);
    return r;
}

} // namespace mstd
