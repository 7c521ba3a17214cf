#include "mstd/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mstd {

namespace {

const std::map<std::string, std::vector<int64_t>>& catalog_table() {
    static const std::map<std::string, std::vector<int64_t>> table = {
        {"A_1", {0, 2, 3, 4, 7, 11, 12, 14}},
        {"A_2", {0, 1, 2, 4, 7, 8, 12, 14, 15}},
        {"A_3", {0, 1, 2, 4, 5, 9, 12, 13, 14, 16, 17, 21, 24, 25, 26, 28, 29}},
        {"A_4", {0, 1, 2, 4, 5, 9, 12, 13, 14}},
        {"A_5", {0, 2, 3, 4, 7, 9, 13, 14, 16}},
        {"A_6", {0, 2, 3, 4, 7, 11, 12, 14, 16}},
        {"A_7", {0, 2, 3, 4, 7, 11, 15, 16, 18}},
        {"A_8", {0, 2, 4, 8, 9, 10, 15, 17, 19}},
        {"A_9", {0, 4, 6, 7, 8, 14, 15, 17, 21}},
        {"A_10", {0, 5, 6, 9, 10, 13, 16, 17, 22}},
        {"A_11", {0, 4, 6, 8, 11, 14, 19, 21, 25}},
        {"A_12", {0, 1, 2, 4, 5, 9, 12, 13, 14, 16, 17}},
        {"A_13", {0, 1, 2, 4, 7, 8, 12, 14, 15, 18, 19, 20}},
        {"A_14", {0, 2, 4, 5, 9, 12, 13, 14, 16, 21, 23, 25, 26, 30, 33, 34,
                  35, 37, 42, 44, 46, 47, 51, 54, 55, 56, 58}},
        {"A_15", {0, 1, 2, 4, 5, 9, 12, 13, 17, 20, 21, 22, 24, 25, 29, 32,
                  33, 37, 40, 41, 42, 44, 45}},
        {"S4_X", {0, 1, 2, 4, 5, 9, 12, 13, 17, 20, 21, 22, 24, 25}},
    };
    return table;
}

int64_t pow2(int64_t n) {
    if (n < 0 || n > 61) throw validation_error("power of two out of range");
    return int64_t{1} << n;
}

// Append [lo, hi] inclusive.
void push_range(std::vector<int64_t>& v, int64_t lo, int64_t hi) {
    for (int64_t x = lo; x <= hi; ++x) v.push_back(x);
}

std::vector<int64_t> reflected(const std::vector<int64_t>& xs, int64_t m) {
    std::vector<int64_t> out;
    out.reserve(xs.size());
    for (int64_t x : xs) out.push_back(m - x);
    return out;
}

ConstructionResult finish(std::vector<int64_t> core, std::vector<int64_t> extra,
                          int64_t claimed_delta,
                          std::optional<std::vector<int64_t>> companion = std::nullopt) {
    std::set<int64_t> b(core.begin(), core.end());
    if (b.size() != core.size()) throw validation_error("symmetric core is not a disjoint union");
    std::set<int64_t> a = b;
    a.insert(extra.begin(), extra.end());

    ConstructionResult res{
        IntSet(std::vector<int64_t>(a.begin(), a.end())),
        std::nullopt,
        IntSet(std::vector<int64_t>(b.begin(), b.end())),
        claimed_delta,
        false,
    };
    if (companion) {
        std::set<int64_t> c = a;
        c.insert(companion->begin(), companion->end());
        res.companion_set = IntSet(std::vector<int64_t>(c.begin(), c.end()));
    }
    SumDiffProfile p = profile(res.primary_set);
    res.verified = p.delta == claimed_delta && symmetry_report(res.symmetric_core).is_symmetric;
    return res;
}

void require(bool ok, const char* what) {
    if (!ok) throw validation_error(what);
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (int i = 1; i <= 15; ++i) out.push_back("A_" + std::to_string(i));
        out.push_back("S4_X");
        return out;
    }();
    return names;
}

IntSet catalog(const std::string& name) {
    auto it = catalog_table().find(name);
    if (it == catalog_table().end()) throw validation_error("unknown catalog set: " + name);
    return IntSet(it->second);
}

ConstructionResult theorem2(int64_t n, int64_t k, int64_t d) {
    require(n >= 3, "theorem2: need n >= 3");
    require(k >= 0 && k <= n - 2, "theorem2: need 0 <= k <= n-2");
    require(d > 1, "theorem2: need d > 1");
    require((pow2(n - k) - 1) % d == 0, "theorem2: need d | 2^{n-k}-1");

    std::vector<int64_t> x;
    for (int64_t j = k; j <= n; ++j) x.push_back(pow2(n) - pow2(j));
    const int64_t m = (pow2(n + 1) + d) + (pow2(n) - pow2(k));

    std::vector<int64_t> core = x;
    for (int64_t y : reflected(x, m)) core.push_back(y);
    for (int64_t j = 1; j <= (pow2(n) - pow2(k)) / d; ++j) core.push_back(pow2(n) + j * d);
    return finish(std::move(core), {pow2(n)}, 1);
}

ConstructionResult theorem3(int64_t n, int64_t l) {
    require(n >= 3, "theorem3: need n >= 3");
    require(l >= 1 && l <= n - 2, "theorem3: need 1 <= l <= n-2");

    std::vector<int64_t> x;
    for (int64_t j = 0; j <= n; ++j) x.push_back(pow2(n) - pow2(j));
    const int64_t m = (pow2(n + 1) - 1) + (pow2(n) - pow2(l));

    std::vector<int64_t> core = x;
    for (int64_t y : reflected(x, m)) core.push_back(y);
    return finish(std::move(core), {pow2(n)}, 1);
}

ConstructionResult theorem4(int64_t n, int64_t d) {
    require(n > 1, "theorem4: need n > 1");
    require(d > 1, "theorem4: need d > 1");

    std::vector<int64_t> x;
    for (int64_t j = 0; j <= n; ++j) x.push_back(j * d);
    const int64_t m = (4 * n + 1) * d + 1;

    std::vector<int64_t> core = x;
    for (int64_t y : reflected(x, m)) core.push_back(y);
    push_range(core, 2 * n * d + 1, (2 * n + 1) * d);
    return finish(std::move(core), {2 * n * d}, 1);
}

ConstructionResult theorem5(int64_t n, int64_t k) {
    require(n >= 2, "theorem5: need n >= 2");
    require(k >= 3, "theorem5: need k >= 3");

    std::vector<int64_t> x;
    for (int64_t j = 0; j < n; ++j) x.push_back(2 * j);
    const int64_t m = 2 * (k + 1) * n - 2;

    std::vector<int64_t> core = x;
    for (int64_t y : reflected(x, m)) core.push_back(y);
    for (int64_t j = 1; j <= k; ++j) core.push_back(2 * j * n - 1);

    // A* = B ∪ {2n} has delta 0; adding m+2 tips it to 1.
    std::set<int64_t> b(core.begin(), core.end());
    if (b.size() != core.size()) throw validation_error("symmetric core is not a disjoint union");
    std::set<int64_t> a_star = b;
    a_star.insert(2 * n);
    IntSet companion(std::vector<int64_t>(a_star.begin(), a_star.end()));

    ConstructionResult res = finish(std::move(core), {2 * n, m + 2}, 1);
    res.companion_set = companion;
    return res;
}

ConstructionResult theorem6(int64_t n, int64_t k) {
    require(n > 1, "theorem6: need n > 1");
    require(k > 1, "theorem6: need k > 1");

    std::vector<int64_t> x;
    push_range(x, 0, n);
    const int64_t m = (2 * k + 3) * n;

    std::vector<int64_t> core = x;
    for (int64_t y : reflected(x, m)) core.push_back(y);
    for (int64_t j = 1; j <= k; ++j) push_range(core, 2 * j * n + 1, (2 * j + 1) * n - 1);

    std::vector<int64_t> tail;
    push_range(tail, (2 * k + 4) * n, (2 * k + 5) * n - 1);
    ConstructionResult res = finish(std::move(core), {2 * n}, 1, tail);

    // The extended set gains one more sum than difference: delta 2.
    if (res.verified && res.companion_set) {
        res.verified = profile(*res.companion_set).delta == 2;
    }
    return res;
}

IntSet base_expand(const IntSet& a, int64_t t, std::optional<int64_t> m_opt) {
    require(t >= 1, "base_expand: need t >= 1");
    require(normalize(a) == a, "base_expand: set must be normalized");
    const int64_t m = m_opt.value_or(2 * a.max() + 1);
    require(m >= 2 * a.max() + 1, "base_expand: base must be at least 2*max+1");

    // Largest element is max(A) * (m^t - 1)/(m - 1); keep it within IntSet range.
    __int128 weight = 0, pw = 1;
    for (int64_t i = 0; i < t; ++i) {
        weight += pw;
        pw *= m;
        if (pw > (__int128{1} << 90)) throw validation_error("base_expand: values overflow");
    }
    if (__int128{a.max()} * weight > (__int128{1} << 62))
        throw validation_error("base_expand: values overflow");

    std::vector<int64_t> values{0};
    int64_t scale = 1;
    for (int64_t i = 0; i < t; ++i) {
        std::vector<int64_t> next;
        next.reserve(values.size() * a.size());
        for (int64_t digit : a.elements())
            for (int64_t v : values) next.push_back(v + digit * scale);
        values = std::move(next);
        scale *= m;
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw validation_error("base_expand: digit expansions collide");
    return IntSet(values);
}

IntSet product_embed(const IntSet& a, const IntSet& b,
                     std::optional<int64_t> lambda_opt, std::optional<int64_t> mu_opt) {
    require(normalize(a) == a, "product_embed: first set must be normalized");
    require(normalize(b) == b, "product_embed: second set must be normalized");
    const int64_t lambda = lambda_opt.value_or(1);
    const int64_t mu = mu_opt.value_or(2 * a.max() + 1);
    require(lambda > 0 && mu > 0, "product_embed: coefficients must be positive");

    if (__int128{lambda} * a.max() + __int128{mu} * b.max() > (__int128{1} << 62))
        throw validation_error("product_embed: values overflow");

    std::vector<int64_t> values;
    values.reserve(a.size() * b.size());
    for (int64_t av : a.elements())
        for (int64_t bv : b.elements()) values.push_back(lambda * av + mu * bv);
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw validation_error("product_embed: coefficient choice collides");
    return IntSet(values);
}

} // namespace mstd
