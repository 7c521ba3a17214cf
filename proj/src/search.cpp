#include "mstd/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "mstd/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mstd {

namespace {

int resolve_workers(int64_t requested) {
    if (requested > 0) return static_cast<int>(std::min<int64_t>(requested, 256));
    if (const char* env = std::getenv("MSTD_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 256));
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// C(n, r) clamped at limit+1 to avoid overflow.
int64_t binomial_clamped(int64_t n, int64_t r, int64_t limit) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    __int128 acc = 1;
    for (int64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > limit) return limit + 1;
    }
    return static_cast<int64_t>(acc);
}

// MSTD test for element masks over [0, 31]: sums fit in 63 bits.
bool is_mstd_mask64(uint64_t mask) {
    uint64_t sums = 0, diffs = 0;
    for (uint64_t m = mask; m != 0; m &= m - 1) {
        int e = __builtin_ctzll(m);
        sums |= mask << e;
        diffs |= mask >> e;
    }
    int64_t sum_size = __builtin_popcountll(sums);
    int64_t diff_size = 2 * __builtin_popcountll(diffs) - 1;
    return sum_size > diff_size;
}

// MSTD test for element masks over [0, 62]: sums need up to 125 bits.
bool is_mstd_mask128(uint64_t mask) {
    unsigned __int128 sums = 0;
    uint64_t diffs = 0;
    for (uint64_t m = mask; m != 0; m &= m - 1) {
        int e = __builtin_ctzll(m);
        sums |= static_cast<unsigned __int128>(mask) << e;
        diffs |= mask >> e;
    }
    int64_t sum_size = __builtin_popcountll(static_cast<uint64_t>(sums)) +
                       __builtin_popcountll(static_cast<uint64_t>(sums >> 64));
    int64_t diff_size = 2 * __builtin_popcountll(diffs) - 1;
    return sum_size > diff_size;
}

bool is_mstd_elems(const std::vector<int64_t>& elems, int64_t diameter) {
    if (diameter <= 62) {
        uint64_t mask = 0;
        for (int64_t e : elems) mask |= uint64_t{1} << e;
        return diameter <= 31 ? is_mstd_mask64(mask) : is_mstd_mask128(mask);
    }
    int64_t sum_size = bits::popcount(bits::sum_bits(elems, diameter));
    int64_t diff_size = 2 * bits::popcount(bits::diff_bits(elems, diameter)) - 1;
    return sum_size > diff_size;
}

int64_t max_rep(const std::vector<int64_t>& elems, int64_t diameter) {
    std::vector<int32_t> cnt(static_cast<size_t>(2 * diameter + 1), 0);
    int64_t best = 0;
    for (int64_t a : elems)
        for (int64_t b : elems) best = std::max<int64_t>(best, ++cnt[static_cast<size_t>(a + b)]);
    return best;
}

struct Bucket {
    std::vector<IntSet> reps;
    int64_t visited = 0;
};

// All sets {0, first, c_1 < ... < c_{r}} with c_i in (first, D].
void scan_first(int64_t first, const SearchConfig& cfg, Bucket& out) {
    const int64_t s = cfg.set_size;
    const int64_t d = cfg.max_diameter;
    const int64_t rest = s - 2;

    std::vector<int64_t> elems(static_cast<size_t>(s));
    elems[0] = 0;
    elems[1] = first;
    std::vector<int64_t> c(static_cast<size_t>(rest));
    for (int64_t i = 0; i < rest; ++i) c[static_cast<size_t>(i)] = first + 1 + i;
    if (rest > 0 && c.back() > d) return;

    while (true) {
        for (int64_t i = 0; i < rest; ++i) elems[static_cast<size_t>(i + 2)] = c[static_cast<size_t>(i)];

        int64_t g = first;
        for (int64_t i = 0; i < rest && g != 1; ++i) g = std::gcd(g, c[static_cast<size_t>(i)]);
        if (g == 1) {
            ++out.visited;
            const int64_t diameter = elems.back();
            if (is_mstd_elems(elems, diameter) &&
                (!cfg.rep_threshold || max_rep(elems, diameter) >= *cfg.rep_threshold)) {
                out.reps.push_back(canonical_form(IntSet(elems)));
            }
        }

        // Next combination in lex order.
        int64_t i = rest - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == d - (rest - 1 - i)) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (int64_t t = i + 1; t < rest; ++t)
            c[static_cast<size_t>(t)] = c[static_cast<size_t>(t - 1)] + 1;
    }
}

double wilson_half(double p, double s, double z) {
    return z * std::sqrt(p * (1 - p) / s + z * z / (4 * s * s)) / (1.0 + z * z / s);
}

void fill_wilson(DensityResult& r) {
    const double z = 1.96, s = static_cast<double>(r.total), p = r.estimate;
    const double center = (p + z * z / (2 * s)) / (1.0 + z * z / s);
    const double half = wilson_half(p, s, z);
    r.wilson_low = std::max(0.0, center - half);
    r.wilson_high = std::min(1.0, center + half);
}

} // namespace

SearchOutcome enumerate_mstd(const SearchConfig& config) {
    if (config.set_size < 2) throw validation_error("search: set_size must be >= 2");
    if (config.max_diameter < config.set_size - 1)
        throw validation_error("search: max_diameter must be >= set_size - 1");
    if (config.rep_threshold && *config.rep_threshold < 1)
        throw validation_error("search: rep_threshold must be >= 1");
    if (config.resource_cap < 1) throw validation_error("search: resource_cap must be >= 1");

    const int64_t candidates =
        binomial_clamped(config.max_diameter, config.set_size - 1, config.resource_cap);
    if (candidates > config.resource_cap)
        throw resource_limit_error("search: candidate count exceeds the resource cap");

    const auto t0 = std::chrono::steady_clock::now();
    const int64_t first_max = config.max_diameter - (config.set_size - 2);
    std::vector<Bucket> buckets(static_cast<size_t>(first_max));

    const int workers = resolve_workers(config.parallelism);
    (void)workers;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (int64_t first = 1; first <= first_max; ++first)
        scan_first(first, config, buckets[static_cast<size_t>(first - 1)]);

    SearchOutcome out;
    for (auto& b : buckets) {
        out.enumerated_count += b.visited;
        for (auto& r : b.reps) out.canonical_reps.push_back(std::move(r));
    }
    std::sort(out.canonical_reps.begin(), out.canonical_reps.end());
    out.canonical_reps.erase(std::unique(out.canonical_reps.begin(), out.canonical_reps.end()),
                             out.canonical_reps.end());
    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

SearchOutcome classify_size9_4rep(int64_t max_diameter, int64_t parallelism) {
    SearchConfig cfg;
    cfg.set_size = 9;
    cfg.max_diameter = max_diameter;
    cfg.rep_threshold = 4;
    cfg.parallelism = parallelism;
    return enumerate_mstd(cfg);
}

DensityResult mstd_density(int64_t n, std::optional<int64_t> samples, uint64_t seed,
                           int64_t parallelism) {
    if (n < 0) throw validation_error("density: n must be >= 0");
    DensityResult r;
    r.n = n;
    const int workers = resolve_workers(parallelism);
    (void)workers;

    if (!samples) {
        if (n > 24) throw validation_error("density: exhaustive mode supports n <= 24");
        r.exhaustive = true;
        r.total = int64_t{1} << (n + 1);
        int64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : hits) num_threads(workers)
#endif
        for (int64_t mask = 1; mask < r.total; ++mask)
            if (is_mstd_mask64(static_cast<uint64_t>(mask))) ++hits;
        r.mstd_count = hits;
        r.estimate = static_cast<double>(hits) / static_cast<double>(r.total);
        r.wilson_low = r.wilson_high = r.estimate;
        return r;
    }

    if (*samples < 1) throw validation_error("density: need at least one sample");
    if (n > 62) throw validation_error("density: sampling mode supports n <= 62");
    r.total = *samples;
    const uint64_t keep = n == 63 ? ~uint64_t{0} : (uint64_t{1} << (n + 1)) - 1;
    int64_t hits = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : hits) num_threads(workers)
#endif
    for (int64_t i = 0; i < *samples; ++i) {
        const uint64_t mask = rng::at(seed, static_cast<uint64_t>(i)) & keep;
        if (mask != 0 && is_mstd_mask128(mask)) ++hits;
    }
    r.mstd_count = hits;
    r.estimate = static_cast<double>(hits) / static_cast<double>(r.total);
    fill_wilson(r);
    return r;
}

} // namespace mstd
