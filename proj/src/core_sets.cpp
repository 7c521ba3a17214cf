#include "mstd/core_sets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mstd {

IntSet::IntSet(std::vector<int64_t> elems) : elems_(std::move(elems)) {
    if (elems_.empty()) throw validation_error("IntSet: empty set rejected");
    std::sort(elems_.begin(), elems_.end());
    if (elems_.front() < 0) throw validation_error("IntSet: negative element (normalize first)");
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
        throw validation_error("IntSet: duplicate element");
    // Kernels double the values; keep that in range.
    if (elems_.back() > (int64_t{1} << 62))
        throw validation_error("IntSet: element too large (2*max must fit in int64)");
}

bool IntSet::contains(int64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

namespace bits {

std::vector<uint64_t> mask_of(const std::vector<int64_t>& elems, int64_t universe_max) {
    std::vector<uint64_t> w(static_cast<size_t>(universe_max / 64 + 1), 0);
    for (int64_t e : elems) w[static_cast<size_t>(e >> 6)] |= uint64_t{1} << (e & 63);
    return w;
}

// dst |= src << s, with dst at least wide enough for the result.
static void shift_or(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, int64_t s) {
    const size_t word = static_cast<size_t>(s >> 6);
    const int bit = static_cast<int>(s & 63);
    if (bit == 0) {
        for (size_t i = 0; i < src.size(); ++i) dst[i + word] |= src[i];
        return;
    }
    uint64_t carry = 0;
    for (size_t i = 0; i < src.size(); ++i) {
        dst[i + word] |= (src[i] << bit) | carry;
        carry = src[i] >> (64 - bit);
    }
    if (carry) dst[src.size() + word] |= carry;
}

// dst |= src >> s (bits that fall off the low end are dropped).
static void shift_or_down(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, int64_t s) {
    const size_t word = static_cast<size_t>(s >> 6);
    const int bit = static_cast<int>(s & 63);
    if (bit == 0) {
        for (size_t i = word; i < src.size(); ++i) dst[i - word] |= src[i];
        return;
    }
    for (size_t i = word; i < src.size(); ++i) {
        uint64_t v = src[i] >> bit;
        if (i + 1 < src.size()) v |= src[i + 1] << (64 - bit);
        dst[i - word] |= v;
    }
}

std::vector<uint64_t> sum_bits(const std::vector<int64_t>& elems, int64_t universe_max) {
    auto m = mask_of(elems, universe_max);
    std::vector<uint64_t> acc(static_cast<size_t>(2 * universe_max / 64 + 2), 0);
    for (int64_t e : elems) shift_or(acc, m, e);
    return acc;
}

std::vector<uint64_t> diff_bits(const std::vector<int64_t>& elems, int64_t universe_max) {
    auto m = mask_of(elems, universe_max);
    std::vector<uint64_t> acc(m.size(), 0);
    for (int64_t e : elems) shift_or_down(acc, m, e);
    return acc;
}

int64_t popcount(const std::vector<uint64_t>& w) {
    int64_t n = 0;
    for (uint64_t x : w) n += std::popcount(x);
    return n;
}

std::vector<int64_t> members(const std::vector<uint64_t>& w, int64_t limit) {
    std::vector<int64_t> out;
    for (size_t i = 0; i < w.size(); ++i) {
        uint64_t x = w[i];
        while (x) {
            int b = std::countr_zero(x);
            int64_t v = static_cast<int64_t>(i) * 64 + b;
            if (v > limit) return out;
            out.push_back(v);
            x &= x - 1;
        }
    }
    return out;
}

std::vector<int64_t> missing(const std::vector<uint64_t>& w, int64_t lo, int64_t hi) {
    std::vector<int64_t> out;
    for (int64_t v = lo; v <= hi; ++v)
        if (!(w[static_cast<size_t>(v >> 6)] >> (v & 63) & 1)) out.push_back(v);
    return out;
}

} // namespace bits

IntSet normalize(const IntSet& a) {
    const auto& e = a.elements();
    std::vector<int64_t> t(e.size());
    for (size_t i = 0; i < e.size(); ++i) t[i] = e[i] - a.min();
    int64_t g = 0;
    for (int64_t x : t) g = std::gcd(g, x);
    if (g == 0) g = 1; // singleton convention
    for (int64_t& x : t) x /= g;
    return IntSet(std::move(t));
}

IntSet reflect(const IntSet& a) {
    std::vector<int64_t> r;
    r.reserve(a.elements().size());
    for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it)
        r.push_back(a.max() - *it);
    return IntSet(std::move(r));
}

IntSet canonical_form(const IntSet& a) {
    IntSet n = normalize(a);
    IntSet r = normalize(reflect(n));
    return r < n ? r : n;
}

IntSet affine_image(const IntSet& a, int64_t u, int64_t v) {
    if (u <= 0) throw validation_error("affine_image: u must be positive");
    std::vector<int64_t> out;
    out.reserve(a.elements().size());
    for (int64_t x : a.elements()) out.push_back(u * x + v);
    return IntSet(std::move(out));
}

IntSet sumset(const IntSet& a) {
    // Work on the translated set so the bitset spans [0, diameter].
    std::vector<int64_t> t(a.elements());
    for (int64_t& x : t) x -= a.min();
    auto sb = bits::sum_bits(t, a.diameter());
    auto mem = bits::members(sb, 2 * a.diameter());
    for (int64_t& x : mem) x += 2 * a.min();
    return IntSet(std::move(mem));
}

IntSet diffset_nonneg(const IntSet& a) {
    std::vector<int64_t> t(a.elements());
    for (int64_t& x : t) x -= a.min();
    auto db = bits::diff_bits(t, a.diameter());
    return IntSet(bits::members(db, a.diameter()));
}

SumDiffProfile profile(const IntSet& a) {
    std::vector<int64_t> t(a.elements());
    for (int64_t& x : t) x -= a.min();
    const int64_t d = a.diameter();
    auto sb = bits::sum_bits(t, d);
    auto db = bits::diff_bits(t, d);

    SumDiffProfile p;
    p.sum_size = bits::popcount(sb);
    p.diff_size = 2 * bits::popcount(db) - 1;
    p.delta = p.sum_size - p.diff_size;
    p.is_mstd = p.delta > 0;
    if (a.size() >= 2)
        p.f_ratio = std::log(static_cast<double>(p.sum_size)) /
                    std::log(static_cast<double>(p.diff_size));
    p.missing_sums = bits::missing(sb, 0, 2 * d);
    for (int64_t& x : p.missing_sums) x += 2 * a.min();
    p.missing_diffs = bits::missing(db, 0, d);
    return p;
}

SymmetryReport symmetry_report(const IntSet& a) {
    const auto& e = a.elements();
    const IntSet centers = sumset(a);
    int64_t best = 0, best_c = 0;
    // Scan doubled centers in ascending order; strict improvement keeps the
    // smallest center on ties.
    for (int64_t c : centers.elements()) {
        int64_t w = 0;
        for (int64_t x : e)
            if (c - x >= 0 && a.contains(c - x)) ++w;
        if (w > best) {
            best = w;
            best_c = c;
        }
    }
    std::vector<int64_t> wit;
    for (int64_t x : e)
        if (best_c - x >= 0 && a.contains(best_c - x)) wit.push_back(x);

    SymmetryReport r{false, std::nullopt, best, best_c, IntSet(std::move(wit))};
    r.is_symmetric = best == a.size();
    if (r.is_symmetric) r.center_doubled = best_c;
    return r;
}

int64_t rep_count(const IntSet& a, int64_t x) {
    int64_t n = 0;
    for (int64_t v : a.elements())
        if (a.contains(x - v)) ++n;
    return n;
}

IntSet parse_set(const std::string& text) {
    std::vector<int64_t> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int64_t v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw validation_error("malformed set literal near '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw validation_error("malformed set literal near '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw validation_error("empty set literal");
    return IntSet(std::move(out)); // IntSet ctor rejects negatives/duplicates
}

std::string format_set(const IntSet& a) {
    std::string s;
    for (size_t i = 0; i < a.elements().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.elements()[i]);
    }
    return s;
}

} // namespace mstd
